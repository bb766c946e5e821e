//! The medium specification file format.
//!
//! A spec file is JSON with three top-level fields: a `format` version tag,
//! the `convention` block describing the basis conventions the matrices are
//! written against (checked against this build's frozen conventions on
//! parse), and one `medium` recipe.  All scalars are exact rational strings
//! — `"3"`, `"-2/7"` — never floats; matrices are row-major arrays of such
//! strings, and grade-2 quantities are flat six-entry arrays in the
//! documented bivector order.  Unknown fields anywhere are rejected.
//!
//! [`serialize`] is the canonical form: parsing a serialized file and
//! serializing it again reproduces it byte for byte.

use bidyadic::convention::basis_convention;
use bidyadic::dyadic::{Dyadic, Space};
use bidyadic::exterior::{MultiForm, MultiVector};
use bidyadic::linalg::Mat;
use bidyadic::media::MediumRecipe;
use bidyadic::scalar::Scalar;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Format tag accepted and emitted by this build.
pub const SPEC_FORMAT: &str = "bidyadic-medium/1";

/// The convention block serialized into every file: the bivector ordering,
/// the orientation and contraction signs, and the pairing normalization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConventionBlock {
    pub bivector_order: Vec<String>,
    pub orientation_sign: i8,
    pub pairing: String,
    pub contraction_sign: i8,
}

impl ConventionBlock {
    /// The conventions this build was compiled with.
    pub fn current() -> ConventionBlock {
        let c = basis_convention();
        ConventionBlock {
            bivector_order: c.bivector_order.iter().map(|s| s.to_string()).collect(),
            orientation_sign: c.orientation_sign,
            pairing: c.pairing.to_string(),
            contraction_sign: c.contraction_sign,
        }
    }

    fn check(&self) -> Result<(), CliError> {
        let current = ConventionBlock::current();
        if *self != current {
            return Err(CliError::Parse(format!(
                "the file's convention block does not match this build \
                 (expected bivector order {:?}, orientation {:+}, pairing {:?}, \
                 contraction sign {:+})",
                current.bivector_order,
                current.orientation_sign,
                current.pairing,
                current.contraction_sign,
            )));
        }
        Ok(())
    }
}

/// A complete medium specification file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MediumSpecFile {
    pub format: String,
    pub convention: ConventionBlock,
    pub medium: RecipeSpec,
}

/// The serialized form of a medium recipe.  Scalars are rational strings;
/// 4×4 matrices are row-major; grade-2 coordinates are six entries in
/// bivector order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case", deny_unknown_fields)]
pub enum RecipeSpec {
    /// `M = α·I⁽²⁾ᵀ`.
    Axion { alpha: String },
    /// `M = (B ∧∧ I)ᵀ + α·I⁽²⁾ᵀ` for a 4×4 generator `B`.
    SkewonAxion { b: Vec<Vec<String>>, alpha: String },
    /// `M = s·P⁽²⁾ᵀ + α·I⁽²⁾ᵀ` for a 4×4 map `P`.
    PAxion { p: Vec<Vec<String>>, scale: String, alpha: String },
    /// `M = s·B⁽²⁾ᵀ + m·(B ∧∧ I)ᵀ + u·I⁽²⁾ᵀ`.
    Compound { b: Vec<Vec<String>>, square: String, mixed: String, unit: String },
    /// `M = Π C + Λ D + α·I⁽²⁾ᵀ` with two-forms `Π`, `Λ` and bivectors
    /// `C`, `D`.
    RankTwo { pi: Vec<String>, lambda: Vec<String>, c: Vec<String>, d: Vec<String>, alpha: String },
    /// `M_m = s·Q⁽²⁾` for a 4×4 grade-1 map `Q` from one-forms to vectors.
    QMedium { q: Vec<Vec<String>>, scale: String },
    /// The antisymmetric special case: `Q = A⌊(·)` for a bivector `A`.
    QAntisym { a: Vec<String>, scale: String },
    /// A raw 6×6 constitutive matrix acting on two-forms.
    Raw { matrix: Vec<Vec<String>> },
}

/// Parse a rational string: an optional-sign integer, or `p/q` with a
/// nonzero denominator.
pub fn scalar_from_str(text: &str, at: &str) -> Result<Scalar, CliError> {
    let t = text.trim();
    let bad = |what: &str| {
        CliError::Parse(format!("{at}: {what} in rational {text:?} (expected \"p\" or \"p/q\")"))
    };
    if let Some((_, denom)) = t.split_once('/') {
        let d = denom.trim().trim_start_matches(['+', '-']);
        if !d.is_empty() && d.chars().all(|c| c == '0') {
            return Err(bad("zero denominator"));
        }
    }
    t.parse::<Scalar>().map_err(|_| bad("unparseable value"))
}

/// Canonical rational rendering: `p` for integers, `p/q` otherwise.
pub fn scalar_to_string(x: &Scalar) -> String {
    x.to_string()
}

fn mat4(rows: &[Vec<String>], out: Space, input: Space, at: &str) -> Result<Dyadic, CliError> {
    if rows.len() != 4 || rows.iter().any(|r| r.len() != 4) {
        return Err(CliError::Parse(format!("{at}: expected a 4×4 matrix of rational strings")));
    }
    let mut entries = Vec::with_capacity(16);
    for (i, row) in rows.iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            entries.push(scalar_from_str(cell, &format!("{at}[{i}][{j}]"))?);
        }
    }
    let mat = Mat::from_fn(4, 4, |i, j| entries[4 * i + j].clone());
    Dyadic::new(out, input, mat).map_err(|e| CliError::Parse(format!("{at}: {e}")))
}

fn mat6(rows: &[Vec<String>], at: &str) -> Result<Mat, CliError> {
    if rows.len() != 6 || rows.iter().any(|r| r.len() != 6) {
        return Err(CliError::Parse(format!("{at}: expected a 6×6 matrix of rational strings")));
    }
    let mut entries = Vec::with_capacity(36);
    for (i, row) in rows.iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            entries.push(scalar_from_str(cell, &format!("{at}[{i}][{j}]"))?);
        }
    }
    Ok(Mat::from_fn(6, 6, |i, j| entries[6 * i + j].clone()))
}

fn six(cells: &[String], at: &str) -> Result<Vec<Scalar>, CliError> {
    if cells.len() != 6 {
        return Err(CliError::Parse(format!(
            "{at}: expected 6 rational strings in bivector order"
        )));
    }
    cells
        .iter()
        .enumerate()
        .map(|(i, cell)| scalar_from_str(cell, &format!("{at}[{i}]")))
        .collect()
}

fn twoform(cells: &[String], at: &str) -> Result<MultiForm, CliError> {
    MultiForm::new(2, six(cells, at)?).map_err(|e| CliError::Parse(format!("{at}: {e}")))
}

fn bivector(cells: &[String], at: &str) -> Result<MultiVector, CliError> {
    MultiVector::new(2, six(cells, at)?).map_err(|e| CliError::Parse(format!("{at}: {e}")))
}

/// Convert a parsed recipe spec into the exact kernel recipe.
pub fn to_recipe(spec: &RecipeSpec) -> Result<MediumRecipe, CliError> {
    let vectors = (Space::vectors(1), Space::vectors(1));
    Ok(match spec {
        RecipeSpec::Axion { alpha } => {
            MediumRecipe::Axion { alpha: scalar_from_str(alpha, "medium.alpha")? }
        }
        RecipeSpec::SkewonAxion { b, alpha } => MediumRecipe::SkewonAxion {
            b: mat4(b, vectors.0, vectors.1, "medium.b")?,
            alpha: scalar_from_str(alpha, "medium.alpha")?,
        },
        RecipeSpec::PAxion { p, scale, alpha } => MediumRecipe::PAxion {
            p: mat4(p, vectors.0, vectors.1, "medium.p")?,
            scale: scalar_from_str(scale, "medium.scale")?,
            alpha: scalar_from_str(alpha, "medium.alpha")?,
        },
        RecipeSpec::Compound { b, square, mixed, unit } => MediumRecipe::CompoundPolynomial {
            b: mat4(b, vectors.0, vectors.1, "medium.b")?,
            square: scalar_from_str(square, "medium.square")?,
            mixed: scalar_from_str(mixed, "medium.mixed")?,
            unit: scalar_from_str(unit, "medium.unit")?,
        },
        RecipeSpec::RankTwo { pi, lambda, c, d, alpha } => MediumRecipe::RankTwo {
            pi: twoform(pi, "medium.pi")?,
            lambda: twoform(lambda, "medium.lambda")?,
            c: bivector(c, "medium.c")?,
            d: bivector(d, "medium.d")?,
            alpha: scalar_from_str(alpha, "medium.alpha")?,
        },
        RecipeSpec::QMedium { q, scale } => MediumRecipe::QMedium {
            q: mat4(q, Space::vectors(1), Space::forms(1), "medium.q")?,
            scale: scalar_from_str(scale, "medium.scale")?,
        },
        RecipeSpec::QAntisym { a, scale } => MediumRecipe::QAntisym {
            a: bivector(a, "medium.a")?,
            scale: scalar_from_str(scale, "medium.scale")?,
        },
        RecipeSpec::Raw { matrix } => MediumRecipe::Raw { mat: mat6(matrix, "medium.matrix")? },
    })
}

fn mat_strings(m: &Mat) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(scalar_to_string).collect()).collect()
}

fn coord_strings(coords: &[Scalar]) -> Vec<String> {
    coords.iter().map(scalar_to_string).collect()
}

/// Convert a kernel recipe back into its serialized form.
pub fn from_recipe(recipe: &MediumRecipe) -> RecipeSpec {
    match recipe {
        MediumRecipe::Axion { alpha } => RecipeSpec::Axion { alpha: scalar_to_string(alpha) },
        MediumRecipe::SkewonAxion { b, alpha } => RecipeSpec::SkewonAxion {
            b: mat_strings(b.mat()),
            alpha: scalar_to_string(alpha),
        },
        MediumRecipe::PAxion { p, scale, alpha } => RecipeSpec::PAxion {
            p: mat_strings(p.mat()),
            scale: scalar_to_string(scale),
            alpha: scalar_to_string(alpha),
        },
        MediumRecipe::CompoundPolynomial { b, square, mixed, unit } => RecipeSpec::Compound {
            b: mat_strings(b.mat()),
            square: scalar_to_string(square),
            mixed: scalar_to_string(mixed),
            unit: scalar_to_string(unit),
        },
        MediumRecipe::RankTwo { pi, lambda, c, d, alpha } => RecipeSpec::RankTwo {
            pi: coord_strings(pi.coords()),
            lambda: coord_strings(lambda.coords()),
            c: coord_strings(c.coords()),
            d: coord_strings(d.coords()),
            alpha: scalar_to_string(alpha),
        },
        MediumRecipe::QMedium { q, scale } => RecipeSpec::QMedium {
            q: mat_strings(q.mat()),
            scale: scalar_to_string(scale),
        },
        MediumRecipe::QAntisym { a, scale } => RecipeSpec::QAntisym {
            a: coord_strings(a.coords()),
            scale: scalar_to_string(scale),
        },
        MediumRecipe::Raw { mat } => RecipeSpec::Raw { matrix: mat_strings(mat) },
    }
}

/// Wrap a kernel recipe into a complete spec file under the current
/// conventions.
pub fn spec_for_recipe(recipe: &MediumRecipe) -> MediumSpecFile {
    MediumSpecFile {
        format: SPEC_FORMAT.to_string(),
        convention: ConventionBlock::current(),
        medium: from_recipe(recipe),
    }
}

/// Parse a spec file: strict JSON (line/column on syntax errors, unknown
/// fields rejected), format tag checked, convention block checked.
pub fn parse_str(text: &str) -> Result<MediumSpecFile, CliError> {
    let file: MediumSpecFile = serde_json::from_str(text).map_err(|e| {
        CliError::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
    })?;
    if file.format != SPEC_FORMAT {
        return Err(CliError::Parse(format!(
            "unsupported format {:?} (this build reads {SPEC_FORMAT:?})",
            file.format
        )));
    }
    file.convention.check()?;
    Ok(file)
}

/// Canonical serialization: pretty JSON with a trailing newline.
pub fn serialize(file: &MediumSpecFile) -> String {
    let mut text = serde_json::to_string_pretty(file).expect("spec files always serialize");
    text.push('\n');
    text
}
