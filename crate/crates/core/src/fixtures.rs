//! Verbatim matrix and table fixtures, their loader, and serializers.
//!
//! Bracket-matrix fixtures store every entry as a list of `[coefficient, bracket]`
//! pairs. The coefficient is a monomial string such as `"1"`, `"-1"` or
//! `"-rho1*rho2"` in the fixture's declared parameters. Betti-table fixtures
//! store their cells as the printed strings (`"."` for zero, `"..."` and
//! `"***"` for entries outside the displayed range).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassmann::{BracketMatrix, BracketPoly};
use crate::matrix::DenseMatrix;
use crate::ring::Ring;

/// Ids of the shipped fixtures.
pub const FIXTURE_IDS: [&str; 6] = ["pfaffian8", "stiefel6", "scroll3", "elliptic4", "hm-betti", "nullcorr-betti"];

/// Shipped JSON text of a fixture.
pub fn raw_json(id: &str) -> Result<&'static str> {
    Ok(match id {
        "pfaffian8" => include_str!("../data/pfaffian8.json"),
        "stiefel6" => include_str!("../data/stiefel6.json"),
        "scroll3" => include_str!("../data/scroll3.json"),
        "elliptic4" => include_str!("../data/elliptic4.json"),
        "hm-betti" => include_str!("../data/hm-betti.json"),
        "nullcorr-betti" => include_str!("../data/nullcorr-betti.json"),
        other => {
            return Err(Error::UnknownFixture(format!(
                "{other} (known: {})",
                FIXTURE_IDS.join(", ")
            )))
        }
    })
}

/// One `[coefficient, bracket]` pair.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Term(pub String, pub Vec<usize>);

/// A matrix whose entries are linear forms in brackets, possibly preceded by
/// columns of raw coefficients (named in `leading`).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BracketFixture {
    pub id: String,
    pub title: String,
    pub bracket_width: usize,
    pub columns: usize,
    pub params: Vec<String>,
    pub leading: Vec<String>,
    pub rows: usize,
    pub cols: usize,
    /// `rows × (cols - leading.len())` entries.
    pub entries: Vec<Vec<Vec<Term>>>,
    /// Rendered entries; written on emission, checked on load.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub display: Option<Vec<Vec<String>>>,
}

/// A printed Tate betti diagram. Row 0 is the top cohomological degree.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct BettiFixture {
    pub id: String,
    pub title: String,
    pub ambient_dim: usize,
    pub rank: u64,
    /// Column `c` of row `i` (counted from the bottom) holds
    /// `h^i(F(c + first_column - i))`.
    pub first_column: i64,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Fixture {
    BracketMatrix(BracketFixture),
    Betti(BettiFixture),
}

/// Output formats for emitted fixtures and CLI results.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Latex,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Self::Text),
            "json" => Ok(Self::Json),
            "latex" => Ok(Self::Latex),
            "csv" => Ok(Self::Csv),
            other => Err(Error::InvalidInput(format!("unknown format {other:?} (text, json, latex, csv)"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Text => "text",
            Self::Json => "json",
            Self::Latex => "latex",
            Self::Csv => "csv",
        })
    }
}

/// Parses and validates fixture JSON.
pub fn parse_json(text: &str) -> Result<Fixture> {
    let fx: Fixture = serde_json::from_str(text).map_err(|e| Error::Parse(format!("fixture JSON: {e}")))?;
    match &fx {
        Fixture::BracketMatrix(b) => b.validate()?,
        Fixture::Betti(b) => b.validate()?,
    }
    Ok(fx)
}

/// Loads a shipped fixture by id.
pub fn load(id: &str) -> Result<Fixture> {
    parse_json(raw_json(id)?)
}

/// Loads a shipped bracket-matrix fixture.
pub fn load_bracket(id: &str) -> Result<BracketFixture> {
    match load(id)? {
        Fixture::BracketMatrix(b) => Ok(b),
        Fixture::Betti(_) => Err(Error::InvalidInput(format!("{id} is a betti table, not a bracket matrix"))),
    }
}

/// Loads a shipped betti-table fixture.
pub fn load_betti(id: &str) -> Result<BettiFixture> {
    match load(id)? {
        Fixture::Betti(b) => Ok(b),
        Fixture::BracketMatrix(_) => Err(Error::InvalidInput(format!("{id} is a bracket matrix, not a betti table"))),
    }
}

/// Serializes a shipped fixture.
pub fn emit(id: &str, format: Format) -> Result<String> {
    Ok(load(id)?.render(format))
}

impl Fixture {
    pub fn id(&self) -> &str {
        match self {
            Self::BracketMatrix(b) => &b.id,
            Self::Betti(b) => &b.id,
        }
    }

    /// The fixture with derived fields filled in, as stored in emitted JSON.
    pub fn with_display(&self) -> Self {
        match self {
            Self::BracketMatrix(b) => {
                let mut b = b.clone();
                b.display = Some(b.rendered_cells());
                Self::BracketMatrix(b)
            }
            Self::Betti(b) => Self::Betti(b.clone()),
        }
    }

    fn without_display(&self) -> Self {
        match self {
            Self::BracketMatrix(b) => Self::BracketMatrix(BracketFixture { display: None, ..b.clone() }),
            Self::Betti(b) => Self::Betti(b.clone()),
        }
    }

    /// Equality ignoring the derived display grid.
    pub fn same_data(&self, other: &Self) -> bool {
        self.without_display() == other.without_display()
    }

    pub fn render(&self, format: Format) -> String {
        if format == Format::Json {
            let v = serde_json::to_string_pretty(&self.with_display()).expect("fixtures serialize");
            return v + "\n";
        }
        let cells = match self {
            Self::BracketMatrix(b) => b.full_cells(),
            Self::Betti(b) => b.rows.clone(),
        };
        render_grid(&cells, format)
    }
}

/// Renders a grid of cell strings in a non-JSON format.
pub fn render_grid(cells: &[Vec<String>], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Text | Format::Json => {
            let ncols = cells.iter().map(Vec::len).max().unwrap_or(0);
            let widths: Vec<usize> = (0..ncols)
                .map(|j| cells.iter().filter_map(|r| r.get(j)).map(|c| c.chars().count()).max().unwrap_or(0))
                .collect();
            for row in cells {
                let line: Vec<String> =
                    row.iter().enumerate().map(|(j, c)| format!("{c:>w$}", w = widths[j])).collect();
                out.push_str(line.join("  ").trim_end());
                out.push('\n');
            }
        }
        Format::Latex => {
            out.push_str("\\pmatrix{\n");
            for row in cells {
                out.push_str(&row.join(" & "));
                out.push_str(" \\cr\n");
            }
            out.push_str("}\n");
        }
        Format::Csv => {
            for row in cells {
                let line: Vec<String> = row.iter().map(|c| csv_field(c)).collect();
                out.push_str(&line.join(","));
                out.push('\n');
            }
        }
    }
    out
}

fn csv_field(c: &str) -> String {
    if c.contains([',', '"', '\n']) {
        format!("\"{}\"", c.replace('"', "\"\""))
    } else {
        c.to_string()
    }
}

/// Parses a coefficient monomial such as `"-3*rho1*rho2"` into an integer and
/// exponents over `params`.
pub fn parse_coeff(s: &str, params: &[String]) -> Result<(i64, Vec<u32>)> {
    let bad = || Error::Parse(format!("coefficient {s:?}"));
    let (sign, body) = match s.strip_prefix('-') {
        Some(rest) => (-1i64, rest),
        None => (1, s.strip_prefix('+').unwrap_or(s)),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let mut c = sign;
    let mut exps = vec![0u32; params.len()];
    for factor in body.split('*') {
        if let Ok(n) = factor.parse::<i64>() {
            c = c.checked_mul(n).ok_or_else(bad)?;
        } else if let Some(p) = params.iter().position(|p| p == factor) {
            exps[p] += 1;
        } else {
            return Err(bad());
        }
    }
    Ok((c, exps))
}

fn bracket_string(t: &[usize]) -> String {
    if t.iter().all(|&i| i < 10) {
        format!("[{}]", t.iter().map(|i| i.to_string()).collect::<String>())
    } else {
        format!("[{}]", t.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" "))
    }
}

/// Renders an entry in bracket notation, e.g. `-[125]+[045]` or `-rho1*rho2[13]`.
pub fn render_terms(terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, Term(c, t)) in terms.iter().enumerate() {
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, c.strip_prefix('+').unwrap_or(c)),
        };
        if neg {
            out.push('-');
        } else if idx > 0 {
            out.push('+');
        }
        if mag != "1" {
            out.push_str(mag);
        }
        out.push_str(&bracket_string(t));
    }
    out
}

impl BracketFixture {
    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Parse(format!("fixture {}: {msg}", self.id)));
        if self.bracket_width == 0 || self.bracket_width > self.columns {
            return bad(format!("bracket width {} with {} columns", self.bracket_width, self.columns));
        }
        if self.entries.len() != self.rows {
            return bad(format!("{} rows declared, {} given", self.rows, self.entries.len()));
        }
        let width = self.cols.saturating_sub(self.leading.len());
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != width {
                return bad(format!("row {i} has {} bracket entries, expected {width}", row.len()));
            }
            for Term(c, t) in row.iter().flatten() {
                parse_coeff(c, &self.params)?;
                if t.len() != self.bracket_width || t.iter().any(|&x| x >= self.columns) {
                    return bad(format!("bracket {t:?} out of shape"));
                }
            }
        }
        if let Some(d) = &self.display {
            if *d != self.rendered_cells() {
                return bad("display grid disagrees with entries".into());
            }
        }
        Ok(())
    }

    /// Bracket entries rendered as strings.
    pub fn rendered_cells(&self) -> Vec<Vec<String>> {
        self.entries.iter().map(|row| row.iter().map(|e| render_terms(e)).collect()).collect()
    }

    /// All columns including the leading coefficient columns (`a_0`, ...).
    pub fn full_cells(&self) -> Vec<Vec<String>> {
        self.rendered_cells()
            .into_iter()
            .enumerate()
            .map(|(i, row)| self.leading.iter().map(|name| format!("{name}_{i}")).chain(row).collect())
            .collect()
    }

    /// Entry `(i, j)` (0-based, counting leading columns) as text.
    pub fn cell(&self, i: usize, j: usize) -> Option<String> {
        self.full_cells().get(i)?.get(j).cloned()
    }

    /// The bracket block as a matrix over `R`, with parameters substituted.
    pub fn bracket_matrix<R: Ring>(&self, param_values: &[R]) -> Result<BracketMatrix<R>> {
        if param_values.len() != self.params.len() {
            return Err(Error::Dimension(format!(
                "fixture {} takes {} parameters, {} given",
                self.id,
                self.params.len(),
                param_values.len()
            )));
        }
        let (k, n) = (self.bracket_width - 1, self.columns - 1);
        let width = self.cols - self.leading.len();
        let mut m = DenseMatrix::zeros(self.rows, width);
        for (i, row) in self.entries.iter().enumerate() {
            for (j, terms) in row.iter().enumerate() {
                let mut acc = BracketPoly::zero_in(k, n);
                for Term(c, t) in terms {
                    let (int, exps) = parse_coeff(c, &self.params)?;
                    let coeff = exps
                        .iter()
                        .zip(param_values)
                        .fold(R::from_i64(int), |acc, (&e, v)| acc * v.pow(e));
                    acc = acc + BracketPoly::bracket_scaled(k, n, t, coeff)?;
                }
                m.set(i, j, acc);
            }
        }
        Ok(m)
    }
}

impl BettiFixture {
    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Parse(format!("fixture {}: {msg}", self.id)));
        if self.rows.len() != self.ambient_dim + 1 {
            return bad(format!("{} rows for ambient dimension {}", self.rows.len(), self.ambient_dim));
        }
        let w = self.rows[0].len();
        for row in &self.rows {
            if row.len() != w {
                return bad("ragged rows".into());
            }
            for c in row {
                parse_cell(c)?;
            }
        }
        Ok(())
    }
}

/// A betti-table cell: `Some(n)` for a number (`"."` is 0), `None` for `"..."`/`"***"`.
pub fn parse_cell(s: &str) -> Result<Option<u64>> {
    match s {
        "." => Ok(Some(0)),
        "..." | "***" => Ok(None),
        other => other
            .parse::<u64>()
            .map(Some)
            .map_err(|_| Error::Parse(format!("betti cell {other:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_load_and_round_trip() {
        for id in FIXTURE_IDS {
            let fx = load(id).unwrap();
            assert_eq!(fx.id(), id);
            let back = parse_json(&fx.render(Format::Json)).unwrap();
            assert!(back.same_data(&fx), "{id}");
            assert_eq!(back, fx.with_display());
        }
        assert!(matches!(load("nope"), Err(Error::UnknownFixture(_))));
    }

    #[test]
    fn coefficient_parsing() {
        let params = vec!["rho1".to_string(), "rho2".to_string()];
        assert_eq!(parse_coeff("-rho1*rho2", &params).unwrap(), (-1, vec![1, 1]));
        assert_eq!(parse_coeff("3*rho2*rho2", &params).unwrap(), (3, vec![0, 2]));
        assert_eq!(parse_coeff("1", &params).unwrap(), (1, vec![0, 0]));
        assert!(parse_coeff("rho3", &params).is_err());
        assert!(parse_coeff("-", &params).is_err());
    }

    #[test]
    fn rendering() {
        let t = vec![Term("-1".into(), vec![1, 2, 5]), Term("1".into(), vec![0, 4, 5])];
        assert_eq!(render_terms(&t), "-[125]+[045]");
        assert_eq!(render_terms(&[Term("-rho1*rho2".into(), vec![1, 3])]), "-rho1*rho2[13]");
        assert_eq!(render_terms(&[]), "0");
    }

    #[test]
    fn tampered_display_is_rejected() {
        let mut fx = load_bracket("scroll3").unwrap();
        let mut d = fx.rendered_cells();
        d[0][0] = "[013]".into();
        fx.display = Some(d);
        let text = serde_json::to_string(&Fixture::BracketMatrix(fx)).unwrap();
        assert!(parse_json(&text).is_err());
    }
}
