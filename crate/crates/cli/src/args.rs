//! Command-line arguments and job payloads.
//!
//! Every subcommand's argument struct doubles as its JSON payload type, so a
//! job file and the equivalent command line go through the same code.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use schemars::JsonSchema;
use serde::Deserialize;

#[derive(Parser, Debug)]
#[command(name = "chowkit", version, about = "Exact resultants and Chow forms via Bezout and Stiefel matrices")]
pub struct Cli {
    #[command(flatten)]
    pub options: Options,
    #[command(subcommand)]
    pub command: Command,
}

/// Options shared by every subcommand.
#[derive(Args, Deserialize, JsonSchema, Clone, Debug, Default)]
#[serde(default, deny_unknown_fields)]
pub struct Options {
    /// Compute over F_p instead of Q. Random suites use F_p regardless; their
    /// modulus defaults to CHOWKIT_PRIME or 2^31-1.
    #[arg(long, global = true)]
    pub prime: Option<u64>,
    /// Override the number of random trials in verification suites.
    #[arg(long, global = true)]
    pub trials: Option<usize>,
    /// Seed for all random choices.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(ValueEnum, Deserialize, JsonSchema, Clone, Copy, Debug, Default, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Latex,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Resultant of two binary forms of equal degree.
    Binary(BinaryArgs),
    /// Resultant of three ternary quadrics, or the shipped 8x8 / 6x6 matrices.
    TernaryQuadrics(TernaryArgs),
    /// Hyperelliptic resultant of a + b sqrt(f) and c + d sqrt(f).
    #[command(alias = "hyper-resultant")]
    Hyper(HyperArgs),
    /// Elliptic 4x4 resultant in the half-period parametrization.
    Elliptic(EllipticArgs),
    /// Chow form of a linear determinantal variety through the wedge composition.
    ChowDet(ChowDetArgs),
    /// Tables of ranks, divisors, Euler characteristics and betti numbers.
    Tables(TablesArgs),
    /// Run a verification suite and report PASS/FAIL per check.
    Verify(VerifyArgs),
    /// Print a shipped fixture.
    Emit(EmitArgs),
    /// Run a JSON job specification.
    Job(JobArgs),
    /// Print or write the JSON Schemas of job files and payloads.
    Schema(SchemaArgs),
}

#[derive(ValueEnum, Deserialize, JsonSchema, Clone, Copy, Debug, Default, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    #[default]
    Sylvester,
    Bezout,
}

#[derive(Args, Deserialize, JsonSchema, Clone, Debug, Default)]
#[serde(default, deny_unknown_fields)]
pub struct BinaryArgs {
    /// Coefficients f_0..f_d of f = sum f_i s^(d-i) t^i, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub f: Vec<String>,
    /// Coefficients of g, same convention and degree as f.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub g: Vec<String>,
    #[arg(long, value_enum, default_value_t = Method::Sylvester)]
    pub method: Method,
    /// Print the evaluated matrix of the chosen method instead of its determinant.
    #[arg(long)]
    pub matrix: bool,
    /// Print the symbolic d x d Bezout bracket matrix of this degree.
    #[arg(long, conflicts_with_all = ["f", "g"])]
    pub brackets: Option<usize>,
    /// Also run the gcd common-root oracle.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(ValueEnum, Deserialize, JsonSchema, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum TernaryMatrix {
    PfaffianMatrix,
    StiefelMatrix,
}

#[derive(ValueEnum, Deserialize, JsonSchema, Clone, Copy, Debug, Default, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum TernaryMethod {
    #[default]
    Pfaffian,
    Stiefel,
}

#[derive(Args, Deserialize, JsonSchema, Clone, Debug, Default)]
#[serde(default, deny_unknown_fields)]
pub struct TernaryArgs {
    /// Coefficients of x^2, xy, xz, y^2, yz, z^2.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub a: Vec<String>,
    /// Second quadric, same monomial order.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub b: Vec<String>,
    /// Third quadric.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub c: Vec<String>,
    #[arg(long, value_enum, default_value_t = TernaryMethod::Pfaffian)]
    pub method: TernaryMethod,
    /// Print a matrix: the shipped bracket matrix, or its evaluation when a, b, c are given.
    #[arg(long, value_enum)]
    pub emit: Option<TernaryMatrix>,
}

#[derive(Args, Deserialize, JsonSchema, Clone, Debug, Default)]
#[serde(default, deny_unknown_fields)]
pub struct HyperArgs {
    /// Genus.
    #[arg(long = "g")]
    #[serde(rename = "g")]
    pub genus: usize,
    /// Degree bound for a and c; b and d have degree at most k - g - 1.
    #[arg(long)]
    pub k: usize,
    /// Optional f, checked against f1 * f2.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub f: Vec<String>,
    /// Coefficients of f1, constant term first.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub f1: Vec<String>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub f2: Vec<String>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub a: Vec<String>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub b: Vec<String>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub c: Vec<String>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub d: Vec<String>,
    #[arg(long, value_enum, default_value_t = Method::Sylvester)]
    pub method: Method,
    /// Print the evaluated matrix instead of its determinant.
    #[arg(long)]
    pub matrix: bool,
    /// Also decide exactly whether the two functions share a zero on the curve.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Args, Deserialize, JsonSchema, Clone, Debug, Default)]
#[serde(default, deny_unknown_fields)]
pub struct EllipticArgs {
    /// a_0, a_1, a_2 of the first function.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub a: Vec<String>,
    /// b_0 of the first function.
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<String>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub c: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub d: Option<String>,
    /// The three finite branch points.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub rho: Vec<String>,
    /// Print the 4x4 matrix (symbolic without functions, evaluated with them).
    #[arg(long)]
    pub matrix: bool,
}

/// A linear matrix in JSON: entry `[b][a]` lists the `n + 1` coefficients.
#[derive(Deserialize, JsonSchema, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct LinearMatrixSpec {
    pub g: usize,
    pub f: usize,
    pub n: usize,
    pub entries: Vec<Vec<Vec<String>>>,
}

#[derive(Args, Deserialize, JsonSchema, Clone, Debug, Default)]
#[serde(default, deny_unknown_fields)]
pub struct ChowDetArgs {
    /// Rational normal scroll with these part sizes, e.g. 2,1.
    #[arg(long, value_delimiter = ',', group = "source")]
    pub scroll: Vec<usize>,
    /// Rational normal curve of this degree.
    #[arg(long, group = "source")]
    pub rnc: Option<usize>,
    /// File holding a linear matrix as JSON.
    #[arg(long, group = "source")]
    pub matrix_file: Option<PathBuf>,
    /// Inline linear matrix (job payloads only).
    #[arg(skip)]
    pub linear_matrix: Option<LinearMatrixSpec>,
    /// Evaluate the Chow form at the subspace spanned by these rows; repeat per row.
    #[arg(long, allow_hyphen_values = true)]
    pub at: Vec<String>,
    /// Also expand the determinant as a bracket polynomial.
    #[arg(long)]
    pub expand: bool,
}

#[derive(ValueEnum, Deserialize, JsonSchema, Clone, Copy, Debug, Default, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum TableKind {
    /// Ranks of the Schur modules of the Ulrich partitions.
    #[default]
    Schur,
    /// The divisor every Ulrich rank is a multiple of.
    Divisor,
    /// Twists of weakly Ulrich line bundles.
    LineRange,
    /// Ulrich Euler characteristic over a range of twists.
    Chi,
    /// The betti table of the rank-2 Ulrich bundle on the plane.
    Rank2,
    /// Horrocks-Mumford betti table.
    Hm,
    /// Null-correlation betti table.
    Nullcorr,
}

#[derive(Args, Deserialize, JsonSchema, Clone, Debug, Default)]
#[serde(default, deny_unknown_fields)]
pub struct TablesArgs {
    #[arg(value_enum, default_value_t = TableKind::Schur)]
    pub kind: TableKind,
    /// Largest n (or k) in grid tables.
    #[arg(long)]
    pub nmax: Option<u64>,
    /// Largest d in grid tables.
    #[arg(long)]
    pub dmax: Option<u64>,
    /// Degree for rank2 and chi.
    #[arg(long)]
    pub d: Option<i64>,
    /// Dimension for chi.
    #[arg(long)]
    pub k: Option<u32>,
    /// h^0 for chi.
    #[arg(long)]
    pub h0: Option<i64>,
}

#[derive(ValueEnum, Deserialize, JsonSchema, Clone, Copy, Debug, Default, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// B * A = 0 in the exterior algebra.
    #[default]
    BaZero,
    /// Sylvester, Bezout and gcd oracle on binary forms.
    Binary,
    /// Pfaffian and determinant of ternary quadric nets.
    Ternary,
    /// Eagon-Northcott complexes.
    EagonNorthcott,
    /// Chow forms from the wedge composition against printed matrices.
    Psi,
    /// The cubic scroll matrix with its sign-corrected entry.
    ScrollCorrected,
    /// Hyperelliptic determinants on planted and generic instances.
    Hyper,
    /// The elliptic 4x4 fixture.
    Elliptic,
    /// Rank and Euler characteristic tables.
    Tables,
    /// Pfaffian, exterior and Grassmann properties.
    Properties,
    /// Every suite at its default size.
    All,
}

#[derive(ValueEnum, Deserialize, JsonSchema, Clone, Copy, Debug, Default, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    #[default]
    Hyper,
    Binary,
}

#[derive(Args, Deserialize, JsonSchema, Clone, Debug, Default)]
#[serde(default, deny_unknown_fields)]
pub struct VerifyArgs {
    #[arg(value_enum, default_value_t = Suite::BaZero)]
    pub suite: Suite,
    /// Family for ba-zero.
    #[arg(long, value_enum, default_value_t = Family::Hyper)]
    pub family: Family,
    /// Largest genus (hyper suites) or number of rows (eagon-northcott).
    #[arg(long)]
    pub gmax: Option<usize>,
    /// Largest k for the hyperelliptic suites.
    #[arg(long)]
    pub kmax: Option<usize>,
    /// Largest degree for the binary suites.
    #[arg(long)]
    pub dmax: Option<usize>,
    /// Largest number of columns for eagon-northcott.
    #[arg(long)]
    pub fmax: Option<usize>,
    /// Largest number of variables for eagon-northcott.
    #[arg(long)]
    pub nmax: Option<usize>,
}

#[derive(Args, Debug)]
pub struct EmitArgs {
    /// Fixture id: pfaffian8, stiefel6, scroll3, elliptic4, hm-betti, nullcorr-betti.
    pub id: String,
}

#[derive(Args, Debug)]
pub struct JobArgs {
    /// Job file, or - for standard input.
    pub path: PathBuf,
}

#[derive(ValueEnum, Deserialize, JsonSchema, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum JobKind {
    Binary,
    TernaryQuadrics,
    Hyper,
    Elliptic,
    ChowDet,
    Tables,
    Verify,
}

impl JobKind {
    pub fn name(self) -> &'static str {
        match self {
            JobKind::Binary => "binary",
            JobKind::TernaryQuadrics => "ternary-quadrics",
            JobKind::Hyper => "hyper",
            JobKind::Elliptic => "elliptic",
            JobKind::ChowDet => "chow-det",
            JobKind::Tables => "tables",
            JobKind::Verify => "verify",
        }
    }
}

/// A job file: one subcommand, its payload and shared options.
#[derive(Deserialize, JsonSchema, Clone, Debug)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub subcommand: JobKind,
    /// Arguments of the subcommand; see the per-subcommand payload schema.
    #[serde(default)]
    pub payload: serde_json::Value,
    #[serde(default)]
    pub options: Options,
}

#[derive(Args, Debug)]
pub struct SchemaArgs {
    /// Which schema to print; `job` is the job file itself.
    #[arg(default_value = "job")]
    pub name: String,
    /// Write every schema into this directory instead of printing one.
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
}
