//! Report files: the typed output of `classify`, `invert`, and `wave`.
//!
//! A report echoes the input spec, then carries only the sections the
//! command produced.  Every number is an exact rational string unless the
//! caller asked for float mirrors, and serialization is deterministic: the
//! same input and build produce the same bytes (timing never enters the
//! report).

use std::collections::BTreeMap;

use bidyadic::dispersion::{extract_quartic, quartic_multisets, plane_wave_solve};
use bidyadic::dyadic::modified_from_constitutive;
use bidyadic::exterior::MultiForm;
use bidyadic::linalg::Mat;
use bidyadic::media::{
    build, classify_raw, decompose_hehl_obukhov, default_probes, invert_rank_two, pq_discriminate,
    structural_class, MediumRecipe, StructuralClass,
};
use bidyadic::scalar::{self, Scalar, Zero};
use bidyadic::Error;
use serde::Serialize;
use serde_json::Value;

use crate::spec_file::{
    from_recipe, scalar_from_str, scalar_to_string, to_recipe, MediumSpecFile, RecipeSpec,
};
use crate::CliError;

/// Format tag on every report.
pub const REPORT_FORMAT: &str = "bidyadic-report/1";

#[derive(Clone, Debug, Serialize)]
pub struct ReportFile {
    pub format: String,
    pub command: String,
    /// Echo of the input spec the report was computed from.
    pub input: MediumSpecFile,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quartic: Option<QuarticSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inverse: Option<InverseSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wave: Option<WaveSection>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassificationSection {
    pub dispersion_free: bool,
    pub class: String,
    /// Recovered parameters of the class, keyed by name; scalars are
    /// rational strings, grade-2 factors are six-entry arrays.
    pub class_parameters: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub discriminator: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inverse_class: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuarticEntry {
    /// Monomial in the wave one-form, e.g. `ν1^2 ν3 ν4`.
    pub monomial: String,
    /// Symmetric-tensor entry for the corresponding index multiset.
    pub tensor_entry: String,
    /// Coefficient of the monomial in the expanded quartic.
    pub coefficient: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coefficient_float: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct QuarticSection {
    pub all_zero: bool,
    /// All 35 entries, in lexicographic multiset order.
    pub entries: Vec<QuarticEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionSection {
    pub principal: Vec<Vec<String>>,
    pub skewon: Vec<Vec<String>>,
    pub axion_scalar: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct InverseSection {
    pub invertible: bool,
    /// `"rank-two closed form"` or `"exact matrix solve"`.
    pub path: String,
    /// The determinant that decided: the 2×2 solve determinant Δ on the
    /// closed-form path, `det M` on the matrix path.
    pub determinant: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
    /// A loadable recipe for the inverse medium.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recipe: Option<RecipeSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct WaveChecks {
    pub nu_wedge_field_is_zero: bool,
    pub nu_wedge_response_is_zero: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WaveSection {
    pub nu: Vec<String>,
    pub found: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub potential: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub response: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<WaveChecks>,
}

impl ReportFile {
    fn new(command: &str, input: &MediumSpecFile) -> ReportFile {
        ReportFile {
            format: REPORT_FORMAT.to_string(),
            command: command.to_string(),
            input: input.clone(),
            classification: None,
            quartic: None,
            decomposition: None,
            inverse: None,
            wave: None,
        }
    }

    /// Exit code the report calls for: `4` when it records a proven
    /// negative (no inverse, no wave), `0` otherwise.
    pub fn exit_code(&self) -> i32 {
        let no_inverse = self.inverse.as_ref().is_some_and(|s| !s.invertible);
        let no_wave = self.wave.as_ref().is_some_and(|s| !s.found);
        if no_inverse || no_wave {
            4
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("reports always serialize");
        text.push('\n');
        text
    }

    /// Deterministic plain-text rendering.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let push = |out: &mut String, line: &str| {
            out.push_str(line);
            out.push('\n');
        };
        push(&mut out, &format!("report format: {}", self.format));
        push(&mut out, &format!("command: {}", self.command));
        push(&mut out, &format!("input medium: {}", family_tag(&self.input.medium)));
        if let Some(c) = &self.classification {
            push(&mut out, "");
            push(&mut out, "classification");
            push(&mut out, &format!("  dispersion-free: {}", yes_no(c.dispersion_free)));
            push(&mut out, &format!("  class: {}", c.class));
            for (key, value) in &c.class_parameters {
                push(&mut out, &format!("    {key} = {}", value_text(value)));
            }
            if let Some(d) = &c.discriminator {
                push(&mut out, &format!("  discriminator: {d}"));
            }
            if let Some(i) = &c.inverse_class {
                push(&mut out, &format!("  inverse class: {i}"));
            }
        }
        if let Some(q) = &self.quartic {
            push(&mut out, "");
            if q.all_zero {
                push(&mut out, "quartic: all 35 coefficients are zero");
            } else {
                let nonzero: Vec<&QuarticEntry> =
                    q.entries.iter().filter(|e| e.coefficient != "0").collect();
                push(
                    &mut out,
                    &format!("quartic: {} of 35 monomial coefficients are nonzero", nonzero.len()),
                );
                for entry in nonzero {
                    push(&mut out, &format!("  {}: {}", entry.monomial, entry.coefficient));
                }
            }
        }
        if let Some(d) = &self.decomposition {
            push(&mut out, "");
            push(&mut out, "principal/skewon/axion decomposition");
            push(&mut out, &format!("  axion scalar: {}", d.axion_scalar));
            push(&mut out, &format!("  principal part: {}", matrix_text(&d.principal)));
            push(&mut out, &format!("  skewon part: {}", matrix_text(&d.skewon)));
        }
        if let Some(i) = &self.inverse {
            push(&mut out, "");
            push(&mut out, &format!("inverse (path: {})", i.path));
            push(&mut out, &format!("  invertible: {}", yes_no(i.invertible)));
            push(&mut out, &format!("  determinant: {}", i.determinant));
            if let Some(r) = i.rank {
                push(&mut out, &format!("  rank: {r}"));
            }
            if let Some(recipe) = &i.recipe {
                push(&mut out, &format!("  inverse recipe family: {}", recipe_tag(recipe)));
                for (key, value) in recipe_parameter_lines(recipe) {
                    push(&mut out, &format!("    {key} = {value}"));
                }
            }
            if let Some(m) = &i.matrix {
                push(&mut out, &format!("  inverse matrix: {}", matrix_text(m)));
            }
            if let Some(c) = &i.class {
                push(&mut out, &format!("  inverse class: {c}"));
            }
        }
        if let Some(w) = &self.wave {
            push(&mut out, "");
            push(&mut out, &format!("plane wave at ν = [{}]", w.nu.join(", ")));
            push(&mut out, &format!("  wave found: {}", yes_no(w.found)));
            if let Some(reason) = &w.reason {
                push(&mut out, &format!("  reason: {reason}"));
            }
            if let Some(p) = &w.potential {
                push(&mut out, &format!("  potential φ: [{}]", p.join(", ")));
            }
            if let Some(f) = &w.field {
                push(&mut out, &format!("  field Φ = ν∧φ: [{}]", f.join(", ")));
            }
            if let Some(r) = &w.response {
                push(&mut out, &format!("  response Ψ = M|Φ: [{}]", r.join(", ")));
            }
            if let Some(c) = &w.checks {
                push(&mut out, &format!("  check ν∧Φ = 0: {}", yes_no(c.nu_wedge_field_is_zero)));
                push(
                    &mut out,
                    &format!("  check ν∧Ψ = 0: {}", yes_no(c.nu_wedge_response_is_zero)),
                );
            }
        }
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn family_tag(spec: &RecipeSpec) -> &'static str {
    recipe_tag(spec)
}

fn recipe_tag(spec: &RecipeSpec) -> &'static str {
    match spec {
        RecipeSpec::Axion { .. } => "axion",
        RecipeSpec::SkewonAxion { .. } => "skewon-axion",
        RecipeSpec::PAxion { .. } => "p-axion",
        RecipeSpec::Compound { .. } => "compound",
        RecipeSpec::RankTwo { .. } => "rank-two",
        RecipeSpec::QMedium { .. } => "q-medium",
        RecipeSpec::QAntisym { .. } => "q-antisym",
        RecipeSpec::Raw { .. } => "raw",
    }
}

fn recipe_parameter_lines(spec: &RecipeSpec) -> Vec<(String, String)> {
    let list = |v: &[String]| format!("[{}]", v.join(", "));
    match spec {
        RecipeSpec::Axion { alpha } => vec![("alpha".into(), alpha.clone())],
        RecipeSpec::SkewonAxion { alpha, .. } => vec![("alpha".into(), alpha.clone())],
        RecipeSpec::PAxion { scale, alpha, .. } => {
            vec![("scale".into(), scale.clone()), ("alpha".into(), alpha.clone())]
        }
        RecipeSpec::Compound { square, mixed, unit, .. } => vec![
            ("square".into(), square.clone()),
            ("mixed".into(), mixed.clone()),
            ("unit".into(), unit.clone()),
        ],
        RecipeSpec::RankTwo { pi, lambda, c, d, alpha } => vec![
            ("pi".into(), list(pi)),
            ("lambda".into(), list(lambda)),
            ("c".into(), list(c)),
            ("d".into(), list(d)),
            ("alpha".into(), alpha.clone()),
        ],
        RecipeSpec::QMedium { scale, .. } => vec![("scale".into(), scale.clone())],
        RecipeSpec::QAntisym { a, scale } => {
            vec![("a".into(), list(a)), ("scale".into(), scale.clone())]
        }
        RecipeSpec::Raw { .. } => Vec::new(),
    }
}

fn value_text(value: &Value) -> String {
    match value {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(value_text).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn matrix_text(rows: &[Vec<String>]) -> String {
    let lines: Vec<String> = rows.iter().map(|r| format!("[{}]", r.join(", "))).collect();
    lines.join(" ")
}

fn mat_strings(m: &Mat) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(scalar_to_string).collect()).collect()
}

fn coords_strings(coords: &[Scalar]) -> Vec<String> {
    coords.iter().map(scalar_to_string).collect()
}

fn monomial_label(multiset: &[u8; 4]) -> String {
    // Multisets carry 0-based coordinate indices; readers see 1-based ones.
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < 4 {
        let mut run = 1;
        while i + run < 4 && multiset[i + run] == multiset[i] {
            run += 1;
        }
        if run == 1 {
            parts.push(format!("ν{}", multiset[i] + 1));
        } else {
            parts.push(format!("ν{}^{run}", multiset[i] + 1));
        }
        i += run;
    }
    parts.join(" ")
}

fn scalar_value(x: &Scalar) -> Value {
    Value::String(scalar_to_string(x))
}

fn coords_value(coords: &[Scalar]) -> Value {
    Value::Array(coords.iter().map(scalar_value).collect())
}

fn class_parameters(class: &StructuralClass) -> BTreeMap<String, Value> {
    let mut params = BTreeMap::new();
    match class {
        StructuralClass::Axion { alpha }
        | StructuralClass::SkewonAxion { alpha }
        | StructuralClass::SpecialPAxion { alpha } => {
            params.insert("alpha".to_string(), scalar_value(alpha));
        }
        StructuralClass::PMedium { p } => {
            params.insert("p".to_string(), scalar_value(p));
        }
        StructuralClass::GeneralPAxion { alpha, p } => {
            params.insert("alpha".to_string(), scalar_value(alpha));
            params.insert("p".to_string(), scalar_value(p));
        }
        StructuralClass::RankTwo(f) => {
            params.insert("pi".to_string(), coords_value(f.pi.coords()));
            params.insert("lambda".to_string(), coords_value(f.lambda.coords()));
            params.insert("c".to_string(), coords_value(f.c.coords()));
            params.insert("d".to_string(), coords_value(f.d.coords()));
            params.insert("alpha".to_string(), scalar_value(&f.alpha));
        }
        StructuralClass::Skewon
        | StructuralClass::DispersionFreeUnrecognized
        | StructuralClass::NotDispersionFree => {}
    }
    params
}

fn quartic_section(mm: &bidyadic::dyadic::Dyadic, float: bool) -> Result<QuarticSection, CliError> {
    let quartic = extract_quartic(mm)?;
    let coefficients = quartic.monomial_coefficients();
    let entries = quartic_multisets()
        .iter()
        .zip(quartic.tensor_entries())
        .zip(&coefficients)
        .map(|((multiset, tensor), coefficient)| QuarticEntry {
            monomial: monomial_label(multiset),
            tensor_entry: scalar_to_string(tensor),
            coefficient: scalar_to_string(coefficient),
            coefficient_float: float.then(|| scalar::to_f64(coefficient)),
        })
        .collect();
    Ok(QuarticSection { all_zero: quartic.is_zero(), entries })
}

/// Classify the medium: structural class, discriminator where applicable,
/// the full 35-coefficient quartic, and the three-part decomposition.
pub fn run_classify(input: &MediumSpecFile, float: bool) -> Result<ReportFile, CliError> {
    let recipe = to_recipe(&input.medium)?;
    let m = build(&recipe)?;
    let verdict = classify_raw(&m)?;
    let mm = modified_from_constitutive(&m)?;
    let decomposition = decompose_hehl_obukhov(&m)?;
    let mut report = ReportFile::new("classify", input);
    report.classification = Some(ClassificationSection {
        dispersion_free: verdict.dispersion_free,
        class: verdict.class.label().to_string(),
        class_parameters: class_parameters(&verdict.class),
        discriminator: verdict.discriminator.map(|d| d.label().to_string()),
        inverse_class: verdict.inverse_class.map(|c| c.label().to_string()),
    });
    report.quartic = Some(quartic_section(&mm, float)?);
    report.decomposition = Some(DecompositionSection {
        principal: mat_strings(decomposition.principal.mat()),
        skewon: mat_strings(decomposition.skewon.mat()),
        axion_scalar: scalar_to_string(&decomposition.axion_scalar),
    });
    Ok(report)
}

/// Invert the medium.  Rank-two recipes with a nonzero unit part go through
/// the closed form (and the report carries the primed parameters as a
/// loadable recipe); everything else goes through the exact matrix solve.
/// A singular medium yields a report with `invertible: false`, the
/// decisive determinant, and the exact rank.
pub fn run_invert(input: &MediumSpecFile) -> Result<ReportFile, CliError> {
    let recipe = to_recipe(&input.medium)?;
    let m = build(&recipe)?;
    let mut report = ReportFile::new("invert", input);
    if let MediumRecipe::RankTwo { pi, lambda, c, d, alpha } = &recipe {
        if !alpha.is_zero() {
            let pc = pi.pair(c)?;
            let pd = pi.pair(d)?;
            let lc = lambda.pair(c)?;
            let ld = lambda.pair(d)?;
            let delta = (&pc + alpha) * (&ld + alpha) - &lc * &pd;
            report.inverse = Some(match invert_rank_two(pi, lambda, c, d, alpha) {
                Ok(inverse) => {
                    let n = m.inverse()?;
                    InverseSection {
                        invertible: true,
                        path: "rank-two closed form".to_string(),
                        determinant: scalar_to_string(&delta),
                        rank: None,
                        matrix: Some(mat_strings(n.mat())),
                        recipe: Some(from_recipe(&MediumRecipe::RankTwo {
                            pi: pi.clone(),
                            lambda: lambda.clone(),
                            c: inverse.c,
                            d: inverse.d,
                            alpha: inverse.alpha,
                        })),
                        class: Some(structural_class(&n)?.label().to_string()),
                    }
                }
                Err(Error::NoInverse { rank }) => InverseSection {
                    invertible: false,
                    path: "rank-two closed form".to_string(),
                    determinant: scalar_to_string(&delta),
                    rank: Some(rank),
                    matrix: None,
                    recipe: None,
                    class: None,
                },
                Err(other) => return Err(other.into()),
            });
            return Ok(report);
        }
    }
    let det = m.mat().det()?;
    report.inverse = Some(if det.is_zero() {
        InverseSection {
            invertible: false,
            path: "exact matrix solve".to_string(),
            determinant: scalar_to_string(&det),
            rank: Some(m.rank()),
            matrix: None,
            recipe: None,
            class: None,
        }
    } else {
        let n = m.inverse()?;
        InverseSection {
            invertible: true,
            path: "exact matrix solve".to_string(),
            determinant: scalar_to_string(&det),
            rank: None,
            matrix: Some(mat_strings(n.mat())),
            recipe: Some(RecipeSpec::Raw { matrix: mat_strings(n.mat()) }),
            class: Some(structural_class(&n)?.label().to_string()),
        }
    });
    Ok(report)
}

/// Solve for a plane wave with the given (nonzero) wave one-form.
pub fn run_wave(input: &MediumSpecFile, nu_parts: &[String; 4]) -> Result<ReportFile, CliError> {
    let mut coords = Vec::with_capacity(4);
    for (i, part) in nu_parts.iter().enumerate() {
        coords.push(scalar_from_str(part, &format!("nu[{i}]"))?);
    }
    let nu = MultiForm::new(1, coords).map_err(|e| CliError::Parse(e.to_string()))?;
    if nu.is_zero() {
        return Err(CliError::Precondition(
            "the wave one-form must be nonzero".to_string(),
        ));
    }
    let recipe = to_recipe(&input.medium)?;
    let m = build(&recipe)?;
    let mut report = ReportFile::new("wave", input);
    let nu_strings = coords_strings(nu.coords());
    report.wave = Some(match plane_wave_solve(&m, &nu) {
        Ok(wave) => {
            let field_check = nu.wedge(&wave.field)?.is_zero();
            let response_check = nu.wedge(&wave.response)?.is_zero();
            WaveSection {
                nu: nu_strings,
                found: true,
                reason: None,
                potential: Some(coords_strings(wave.potential.coords())),
                field: Some(coords_strings(wave.field.coords())),
                response: Some(coords_strings(wave.response.coords())),
                checks: Some(WaveChecks {
                    nu_wedge_field_is_zero: field_check,
                    nu_wedge_response_is_zero: response_check,
                }),
            }
        }
        Err(Error::NoWave) => WaveSection {
            nu: nu_strings,
            found: false,
            reason: Some(
                "the dispersion dyadic at ν admits no field beyond the gauge line".to_string(),
            ),
            potential: None,
            field: None,
            response: None,
            checks: None,
        },
        Err(other) => return Err(other.into()),
    });
    Ok(report)
}

/// Recompute the discriminator on demand (used by the acceptance suite).
pub fn discriminator_label(input: &MediumSpecFile) -> Result<Option<String>, CliError> {
    let m = build(&to_recipe(&input.medium)?)?;
    let mm = modified_from_constitutive(&m)?;
    if mm.rank() != 6 {
        return Ok(None);
    }
    Ok(Some(pq_discriminate(&mm, &default_probes())?.label().to_string()))
}
