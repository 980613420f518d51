//! Input-file model and parsers.
//!
//! Three small text formats, all line-oriented, diff-friendly, and easy
//! for a risk system to generate:
//!
//! * **Portfolio files** are sectioned. An optional `[fx]` section holds
//!   `key = value` lines for `nu` and `tau`; a `[borrowers]` section and
//!   a `[pairs]` section each hold a CSV block whose first line is a
//!   header row, so column order is free. Borrower rows may carry the
//!   optional process columns `a0`, `mu`, `debt`, `f0` (all four or
//!   none), which GBM-path simulation requires.
//! * **Adjusted files** are the plain CSV written by `adjust` and read
//!   back by `check`.
//! * **Curve specs** hold a single `[curve]` section with `p`, `rho`,
//!   and a comma-separated `grid`.
//!
//! Everywhere, `#` starts a comment and blank lines are ignored. Every
//! diagnostic is a single line prefixed with the offending line number
//! and maps to exit code 2.

use std::collections::HashMap;

use crate::Failure;
use fxrisk::{AssetProcess64, BorrowerParams64, Correlation64, DebtSpec64, Probability64};

/// One validated borrower row.
#[derive(Debug)]
pub struct Borrower {
    pub id: String,
    pub params: BorrowerParams64,
    /// Process-level parameters, present when the file carries the
    /// `a0,mu,debt,f0` columns.
    pub process: Option<(AssetProcess64, DebtSpec64)>,
    /// Line number of the row, for later diagnostics.
    pub line: usize,
}

/// One validated pair row, with indices into the borrower list.
#[derive(Debug)]
pub struct PairRow {
    pub id1: String,
    pub id2: String,
    pub i1: usize,
    pub i2: usize,
    pub rho: Correlation64,
    pub line: usize,
}

/// A parsed portfolio file. FX parameters stay raw here because flags
/// may still override them; [`crate::commands`] resolves them.
#[derive(Debug)]
pub struct Portfolio {
    pub borrowers: Vec<Borrower>,
    pub pairs: Vec<PairRow>,
    pub file_nu: Option<f64>,
    pub file_tau: Option<f64>,
}

/// One row of an adjusted file, as read back by `check`.
#[derive(Debug)]
pub struct AdjustedRow {
    pub id1: String,
    pub id2: String,
    pub p1: Probability64,
    pub p2: Probability64,
    pub p1_star: Probability64,
    pub p2_star: Probability64,
    pub rho: Correlation64,
    pub rho_star: Correlation64,
    pub line: usize,
}

/// Reads a whole input file, mapping IO problems to exit code 2.
pub fn read_file(path: &std::path::Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))
}

fn parse_num(field: &str, name: &str, line: usize) -> Result<f64, Failure> {
    field.parse::<f64>().map_err(|_| {
        Failure::new(2, format!("line {line}: invalid number for {name}: '{field}'"))
    })
}

fn line_err(line: usize, e: impl std::fmt::Display) -> Failure {
    Failure::new(2, format!("line {line}: {e}"))
}

/// Positions of the named columns within a header row.
struct Header {
    cols: HashMap<String, usize>,
    width: usize,
    line: usize,
}

impl Header {
    fn parse(raw: &str, line: usize, known: &[&str]) -> Result<Self, Failure> {
        let mut cols = HashMap::new();
        let names: Vec<&str> = raw.split(',').map(str::trim).collect();
        for (i, name) in names.iter().enumerate() {
            if !known.contains(name) {
                return Err(line_err(line, format!("unknown column '{name}'")));
            }
            if cols.insert(name.to_string(), i).is_some() {
                return Err(line_err(line, format!("duplicate column '{name}'")));
            }
        }
        Ok(Self {
            cols,
            width: names.len(),
            line,
        })
    }

    fn require(&self, name: &str) -> Result<usize, Failure> {
        self.cols.get(name).copied().ok_or_else(|| {
            line_err(self.line, format!("missing required column '{name}'"))
        })
    }

    fn optional(&self, name: &str) -> Option<usize> {
        self.cols.get(name).copied()
    }

    /// Splits a data row and checks the field count against the header.
    fn split<'a>(&self, raw: &'a str, line: usize) -> Result<Vec<&'a str>, Failure> {
        let fields: Vec<&str> = raw.split(',').map(str::trim).collect();
        if fields.len() != self.width {
            return Err(line_err(
                line,
                format!("expected {} fields, found {}", self.width, fields.len()),
            ));
        }
        Ok(fields)
    }
}

/// The per-line state machine shared by the sectioned formats: yields
/// `(line_number, content)` for every semantic line, with comments and
/// blanks removed.
fn semantic_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

#[derive(PartialEq, Clone, Copy)]
enum Section {
    None,
    Fx,
    Borrowers,
    Pairs,
}

/// Parses and validates a portfolio file.
pub fn parse_portfolio(text: &str) -> Result<Portfolio, Failure> {
    let mut section = Section::None;
    let mut seen: Vec<Section> = Vec::new();
    let mut file_nu = None;
    let mut file_tau = None;
    let mut borrower_header: Option<Header> = None;
    let mut pair_header: Option<Header> = None;
    let mut borrowers: Vec<Borrower> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    // Pair rows are resolved against the borrower list after the pass,
    // so the [pairs] section may precede [borrowers].
    let mut raw_pairs: Vec<(String, String, f64, usize)> = Vec::new();

    for (line, content) in semantic_lines(text) {
        if let Some(name) = content.strip_prefix('[') {
            let next = match name.strip_suffix(']') {
                Some("fx") => Section::Fx,
                Some("borrowers") => Section::Borrowers,
                Some("pairs") => Section::Pairs,
                _ => {
                    return Err(line_err(line, format!("unknown section '{content}'")));
                }
            };
            if seen.contains(&next) {
                return Err(line_err(line, format!("duplicate section '{content}'")));
            }
            seen.push(next);
            section = next;
            continue;
        }
        match section {
            Section::None => {
                return Err(line_err(line, "content before any section header"));
            }
            Section::Fx => {
                let (key, value) = content
                    .split_once('=')
                    .ok_or_else(|| line_err(line, "expected 'key = value'"))?;
                let slot = match key.trim() {
                    "nu" => &mut file_nu,
                    "tau" => &mut file_tau,
                    other => {
                        return Err(line_err(line, format!("unknown fx key '{other}'")));
                    }
                };
                if slot.is_some() {
                    return Err(line_err(line, format!("duplicate fx key '{}'", key.trim())));
                }
                *slot = Some(parse_num(value.trim(), key.trim(), line)?);
            }
            Section::Borrowers => {
                let header = match &borrower_header {
                    Some(h) => h,
                    None => {
                        let h = Header::parse(
                            content,
                            line,
                            &["id", "pd", "sigma", "r", "a0", "mu", "debt", "f0"],
                        )?;
                        h.require("id")?;
                        h.require("pd")?;
                        h.require("sigma")?;
                        h.require("r")?;
                        let process = ["a0", "mu", "debt", "f0"];
                        let present = process.iter().filter(|c| h.optional(c).is_some()).count();
                        if present != 0 && present != process.len() {
                            return Err(line_err(
                                line,
                                "process columns a0,mu,debt,f0 must be given together",
                            ));
                        }
                        borrower_header = Some(h);
                        continue;
                    }
                };
                let fields = header.split(content, line)?;
                let id = fields[header.require("id")?];
                if id.is_empty() {
                    return Err(line_err(line, "empty borrower id"));
                }
                let pd = parse_num(fields[header.require("pd")?], "pd", line)?;
                let sigma = parse_num(fields[header.require("sigma")?], "sigma", line)?;
                let r = parse_num(fields[header.require("r")?], "r", line)?;
                let pd = Probability64::new(pd).map_err(|e| line_err(line, e))?;
                let r = Correlation64::new(r).map_err(|e| line_err(line, e))?;
                let params =
                    BorrowerParams64::new(pd, sigma, r).map_err(|e| line_err(line, e))?;
                let process = match header.optional("a0") {
                    Some(a0_col) => {
                        let a0 = parse_num(fields[a0_col], "a0", line)?;
                        let mu = parse_num(fields[header.require("mu")?], "mu", line)?;
                        let debt = parse_num(fields[header.require("debt")?], "debt", line)?;
                        let f0 = parse_num(fields[header.require("f0")?], "f0", line)?;
                        let asset =
                            AssetProcess64::new(a0, mu, sigma).map_err(|e| line_err(line, e))?;
                        let debt = DebtSpec64::new(debt, f0).map_err(|e| line_err(line, e))?;
                        Some((asset, debt))
                    }
                    None => None,
                };
                if index.insert(id.to_string(), borrowers.len()).is_some() {
                    return Err(line_err(line, format!("duplicate borrower id '{id}'")));
                }
                borrowers.push(Borrower {
                    id: id.to_string(),
                    params,
                    process,
                    line,
                });
            }
            Section::Pairs => {
                let header = match &pair_header {
                    Some(h) => h,
                    None => {
                        let h = Header::parse(content, line, &["id1", "id2", "rho"])?;
                        h.require("id1")?;
                        h.require("id2")?;
                        h.require("rho")?;
                        pair_header = Some(h);
                        continue;
                    }
                };
                let fields = header.split(content, line)?;
                let id1 = fields[header.require("id1")?].to_string();
                let id2 = fields[header.require("id2")?].to_string();
                let rho = parse_num(fields[header.require("rho")?], "rho", line)?;
                raw_pairs.push((id1, id2, rho, line));
            }
        }
    }

    let mut pairs = Vec::with_capacity(raw_pairs.len());
    for (id1, id2, rho, line) in raw_pairs {
        let lookup = |id: &str| {
            index.get(id).copied().ok_or_else(|| {
                line_err(line, format!("unknown borrower id '{id}'"))
            })
        };
        let i1 = lookup(&id1)?;
        let i2 = lookup(&id2)?;
        let rho = Correlation64::new(rho).map_err(|e| line_err(line, e))?;
        pairs.push(PairRow {
            id1,
            id2,
            i1,
            i2,
            rho,
            line,
        });
    }

    Ok(Portfolio {
        borrowers,
        pairs,
        file_nu,
        file_tau,
    })
}

/// Parses the CSV written by `adjust`: a header row followed by data
/// rows with columns `id1,id2,p1,p2,rho,p1_star,p2_star,rho_star`.
pub fn parse_adjusted(text: &str) -> Result<Vec<AdjustedRow>, Failure> {
    let mut header: Option<Header> = None;
    let mut rows = Vec::new();
    for (line, content) in semantic_lines(text) {
        let h = match &header {
            Some(h) => h,
            None => {
                let h = Header::parse(
                    content,
                    line,
                    &["id1", "id2", "p1", "p2", "rho", "p1_star", "p2_star", "rho_star"],
                )?;
                for required in ["id1", "id2", "p1", "p2", "rho", "p1_star", "p2_star", "rho_star"]
                {
                    h.require(required)?;
                }
                header = Some(h);
                continue;
            }
        };
        let fields = h.split(content, line)?;
        let prob = |name: &str| -> Result<Probability64, Failure> {
            let x = parse_num(fields[h.require(name).unwrap()], name, line)?;
            Probability64::new(x).map_err(|e| line_err(line, format!("{name}: {e}")))
        };
        let corr = |name: &str| -> Result<Correlation64, Failure> {
            let x = parse_num(fields[h.require(name).unwrap()], name, line)?;
            Correlation64::new(x).map_err(|e| line_err(line, format!("{name}: {e}")))
        };
        rows.push(AdjustedRow {
            id1: fields[h.require("id1")?].to_string(),
            id2: fields[h.require("id2")?].to_string(),
            p1: prob("p1")?,
            p2: prob("p2")?,
            p1_star: prob("p1_star")?,
            p2_star: prob("p2_star")?,
            rho: corr("rho")?,
            rho_star: corr("rho_star")?,
            line,
        });
    }
    Ok(rows)
}

/// Parses a curve-spec file: a `[curve]` section with `p`, `rho`, and a
/// comma-separated `grid`. Values come back raw; the command validates
/// ranges so that flag-supplied specs get identical treatment.
pub fn parse_curve_spec(text: &str) -> Result<(f64, f64, Vec<f64>), Failure> {
    let mut in_curve = false;
    let mut p = None;
    let mut rho = None;
    let mut grid: Option<Vec<f64>> = None;
    for (line, content) in semantic_lines(text) {
        if content.starts_with('[') {
            if content == "[curve]" && !in_curve {
                in_curve = true;
                continue;
            }
            return Err(line_err(line, format!("unexpected section '{content}'")));
        }
        if !in_curve {
            return Err(line_err(line, "content before the [curve] section"));
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| line_err(line, "expected 'key = value'"))?;
        match key.trim() {
            "p" => {
                if p.replace(parse_num(value.trim(), "p", line)?).is_some() {
                    return Err(line_err(line, "duplicate key 'p'"));
                }
            }
            "rho" => {
                if rho.replace(parse_num(value.trim(), "rho", line)?).is_some() {
                    return Err(line_err(line, "duplicate key 'rho'"));
                }
            }
            "grid" => {
                let parsed = value
                    .split(',')
                    .map(|v| parse_num(v.trim(), "grid", line))
                    .collect::<Result<Vec<f64>, Failure>>()?;
                if grid.replace(parsed).is_some() {
                    return Err(line_err(line, "duplicate key 'grid'"));
                }
            }
            other => {
                return Err(line_err(line, format!("unknown curve key '{other}'")));
            }
        }
    }
    let missing = |what: &str| Failure::new(2, format!("curve spec: missing key '{what}'"));
    Ok((
        p.ok_or_else(|| missing("p"))?,
        rho.ok_or_else(|| missing("rho"))?,
        grid.ok_or_else(|| missing("grid"))?,
    ))
}
