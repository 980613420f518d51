//! Byte-stable numeric formatting for all command output.
//!
//! Every value is printed in plain fixed notation with exactly twelve
//! significant digits, so identical inputs always produce identical
//! output bytes and goldens can be compared with `diff`.

/// Formats `x` with twelve significant digits in fixed (never scientific)
/// notation.
///
/// The number of decimal places adapts to the magnitude: `0.36` becomes
/// `0.360000000000`, `150.0` becomes `150.000000000`, and a residual of
/// order `1e-5` keeps twelve digits after its leading zeros. Exact zero
/// is printed as `0.000000000000` regardless of sign.
pub fn format_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0.000000000000".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

#[cfg(test)]
mod tests {
    // Frozen oracle values keep their full 17-significant-digit
    // printout so they can be diffed verbatim against the reference
    // generator.
    #![allow(clippy::excessive_precision)]

    use super::*;

    #[test]
    fn twelve_significant_digits_across_magnitudes() {
        assert_eq!(format_sig12(0.36), "0.360000000000");
        assert_eq!(format_sig12(0.01), "0.0100000000000");
        assert_eq!(format_sig12(1.5), "1.50000000000");
        assert_eq!(format_sig12(150.0), "150.000000000");
        assert_eq!(format_sig12(0.0187284526558125), "0.0187284526558");
        assert_eq!(format_sig12(1.4974779677862340e-4), "0.000149747796779");
    }

    #[test]
    fn zero_and_signs() {
        assert_eq!(format_sig12(0.0), "0.000000000000");
        assert_eq!(format_sig12(-0.0), "0.000000000000");
        assert_eq!(format_sig12(-0.36), "-0.360000000000");
    }

    #[test]
    fn tiny_values_stay_fixed_notation() {
        let s = format_sig12(2.4394939677035723e-5);
        assert_eq!(s, "0.0000243949396770");
        assert!(!s.contains('e'));
    }
}
