//! The medium laboratory: constructors for every family of constitutive
//! maps handled by the kernel, the principal/skewon/axion decomposition,
//! exact quadratic-relation certificates, the P-versus-Q discriminator, the
//! closed-form rank-two inverse, affine transport, and a classifier that
//! recognises raw matrices.
//!
//! Throughout, a *constitutive map* `M` sends two-forms to two-forms, and
//! its *modified* companion is `M_m = e_N⌊M`, a bivector-valued map on
//! two-forms.  The dispersion-free families are
//!
//! ```text
//! axion            M = α·I⁽²⁾ᵀ
//! skewon-axion     M = (B ∧∧ I)ᵀ + α·I⁽²⁾ᵀ
//! P-axion          M = m·P⁽²⁾ᵀ + α·I⁽²⁾ᵀ
//! rank-two         M = Π C + Λ D + α·I⁽²⁾ᵀ
//! ```
//!
//! while Q-media (`M_m = m·Q⁽²⁾` for a grade-1 map `Q` on one-forms) impose
//! a genuine dispersion equation unless `Q` is antisymmetric, in which case
//! they fall into the rank-two family.

use alloc::vec::Vec;
use core::fmt;

use crate::dispersion::is_dispersion_free;
use crate::dyadic::{
    antisymmetric_map_from_bivector, complement_map, constitutive_from_modified, dyad_form_vector,
    modified_from_constitutive, Dyadic, Space,
};
use crate::exterior::{basis_oneform, Kind, MultiForm, MultiVector};
use crate::linalg::Mat;
use crate::qpoly::QPoly;
use crate::scalar::{int, One, Scalar, Zero};
use crate::{Error, Result};

fn unit_bidyadic() -> Dyadic {
    Dyadic::identity(Space::forms(2))
}

/// `e_N⌊I⁽²⁾ᵀ` as a bivector-valued map on two-forms — the unit of the dot
/// product and the axion direction on the modified side.
pub fn modified_unit() -> Dyadic {
    complement_map(Space::forms(2))
}

fn check_constitutive(m: &Dyadic) -> Result<()> {
    if m.out() != Space::forms(2) || m.input() != Space::forms(2) {
        return Err(Error::SpaceMismatch { expected: Space::forms(2), found: m.out() });
    }
    Ok(())
}

fn check_modified(mm: &Dyadic) -> Result<()> {
    if mm.out() != Space::vectors(2) || mm.input() != Space::forms(2) {
        return Err(Error::SpaceMismatch { expected: Space::vectors(2), found: mm.out() });
    }
    Ok(())
}

fn check_grade1_map(b: &Dyadic, input_kind: Kind) -> Result<()> {
    let expected = match input_kind {
        Kind::Vector => Space::vectors(1),
        Kind::Form => Space::forms(1),
    };
    if b.out() != Space::vectors(1) || b.input() != expected {
        return Err(Error::SpaceMismatch { expected, found: b.input() });
    }
    Ok(())
}

/// `Some(k)` iff `x == k·reference`.  `reference` must be nonzero.
fn proportionality_factor(reference: &Mat, x: &Mat) -> Option<Scalar> {
    for i in 0..reference.rows() {
        for j in 0..reference.cols() {
            if !reference[(i, j)].is_zero() {
                let k = &x[(i, j)] / &reference[(i, j)];
                return (*x == reference.scale(&k)).then_some(k);
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Recipes
// ---------------------------------------------------------------------------

/// A constructive description of a constitutive map.
///
/// Grade-1 map parameters (`b`, `p`) send vectors to vectors; the Q-medium
/// parameter `q` sends one-forms to vectors; `a` is a bivector; `pi`/`lambda`
/// are two-forms and `c`/`d` bivectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MediumRecipe {
    /// `α·I⁽²⁾ᵀ`: a pure multiple of the unit.
    Axion { alpha: Scalar },
    /// `(B ∧∧ I)ᵀ + α·I⁽²⁾ᵀ`.
    SkewonAxion { b: Dyadic, alpha: Scalar },
    /// `scale·P⁽²⁾ᵀ + α·I⁽²⁾ᵀ`.
    PAxion { p: Dyadic, scale: Scalar, alpha: Scalar },
    /// `square·B⁽²⁾ᵀ + mixed·(B ∧∧ I)ᵀ + unit·I⁽²⁾ᵀ`: the general quadratic
    /// compound polynomial in one grade-1 map.
    CompoundPolynomial { b: Dyadic, square: Scalar, mixed: Scalar, unit: Scalar },
    /// `Π C + Λ D + α·I⁽²⁾ᵀ`: the rank-two-plus-unit family.
    RankTwo { pi: MultiForm, lambda: MultiForm, c: MultiVector, d: MultiVector, alpha: Scalar },
    /// Modified map `scale·Q⁽²⁾`, pulled back to the constitutive side.
    QMedium { q: Dyadic, scale: Scalar },
    /// Q-medium whose grade-1 map is the antisymmetric map `A⌊(·)` of a
    /// bivector `a`.
    QAntisym { a: MultiVector, scale: Scalar },
    /// A raw 6×6 matrix taken verbatim as a map on two-forms.
    Raw { mat: Mat },
}

/// Build the constitutive map of a recipe.
pub fn build(recipe: &MediumRecipe) -> Result<Dyadic> {
    match recipe {
        MediumRecipe::Axion { alpha } => Ok(unit_bidyadic().scale(alpha)),
        MediumRecipe::SkewonAxion { b, alpha } => {
            check_grade1_map(b, Kind::Vector)?;
            let wedge = b.double_wedge(&Dyadic::identity(Space::vectors(1)))?;
            wedge.transpose().add(&unit_bidyadic().scale(alpha))
        }
        MediumRecipe::PAxion { p, scale, alpha } => {
            check_grade1_map(p, Kind::Vector)?;
            let principal = p.compound(2)?.transpose().scale(scale);
            principal.add(&unit_bidyadic().scale(alpha))
        }
        MediumRecipe::CompoundPolynomial { b, square, mixed, unit } => {
            check_grade1_map(b, Kind::Vector)?;
            let sq = b.compound(2)?.transpose().scale(square);
            let mix = b
                .double_wedge(&Dyadic::identity(Space::vectors(1)))?
                .transpose()
                .scale(mixed);
            sq.add(&mix)?.add(&unit_bidyadic().scale(unit))
        }
        MediumRecipe::RankTwo { pi, lambda, c, d, alpha } => {
            for form in [pi, lambda] {
                if form.grade() != 2 {
                    return Err(Error::GradeMismatch { expected: 2, found: form.grade() });
                }
            }
            for vector in [c, d] {
                if vector.grade() != 2 {
                    return Err(Error::GradeMismatch { expected: 2, found: vector.grade() });
                }
            }
            dyad_form_vector(pi, c)
                .add(&dyad_form_vector(lambda, d))?
                .add(&unit_bidyadic().scale(alpha))
        }
        MediumRecipe::QMedium { q, scale } => {
            check_grade1_map(q, Kind::Form)?;
            constitutive_from_modified(&q.compound(2)?.scale(scale))
        }
        MediumRecipe::QAntisym { a, scale } => {
            let q = antisymmetric_map_from_bivector(a)?;
            constitutive_from_modified(&q.compound(2)?.scale(scale))
        }
        MediumRecipe::Raw { mat } => {
            Dyadic::new(Space::forms(2), Space::forms(2), mat.clone())
        }
    }
}

// ---------------------------------------------------------------------------
// Principal / skewon / axion decomposition
// ---------------------------------------------------------------------------

/// The three-way split of a constitutive map: `M = principal + skewon +
/// axion_scalar·I⁽²⁾ᵀ`, with the skewon part carrying exactly the
/// antisymmetric part of `M_m` and the principal part symmetric and
/// trace-free on the modified side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HODecomposition {
    pub principal: Dyadic,
    pub skewon: Dyadic,
    pub axion_scalar: Scalar,
}

impl HODecomposition {
    pub fn reassemble(&self) -> Result<Dyadic> {
        self.principal
            .add(&self.skewon)?
            .add(&unit_bidyadic().scale(&self.axion_scalar))
    }
}

/// Split a constitutive map into principal, skewon, and axion parts
/// (the Hehl–Obukhov decomposition).
pub fn decompose_hehl_obukhov(m: &Dyadic) -> Result<HODecomposition> {
    check_constitutive(m)?;
    let axion_scalar = m.trace()? / int(6);
    let mm = modified_from_constitutive(m)?;
    let skewon = constitutive_from_modified(&mm.antisymmetric_part()?)?;
    let principal = m.sub(&skewon)?.sub(&unit_bidyadic().scale(&axion_scalar))?;
    Ok(HODecomposition { principal, skewon, axion_scalar })
}

// ---------------------------------------------------------------------------
// Rank-two inverse
// ---------------------------------------------------------------------------

/// The inverse of `Π C + Λ D + α·I⁽²⁾ᵀ`, expressed in the same shape:
/// inverse `= Π c + Λ d + alpha·I⁽²⁾ᵀ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTwoInverse {
    pub c: MultiVector,
    pub d: MultiVector,
    pub alpha: Scalar,
}

/// Closed-form inverse of the rank-two family.
///
/// With `Π, Λ` independent two-forms, `C, D` bivectors and `α ≠ 0`, the
/// inverse has the same shape with `α′ = 1/α` and `(C′, D′)` from an exact
/// 2×2 solve whose determinant is
///
/// ```text
/// Δ = (Π|C + α)(Λ|D + α) − (Λ|C)(Π|D);
/// ```
///
/// `Δ = 0` certifies that no inverse exists (the full matrix is singular),
/// and `D = 0` collapses the solve to `C′ = −C/(α(Π|C + α))`.
pub fn invert_rank_two(
    pi: &MultiForm,
    lambda: &MultiForm,
    c: &MultiVector,
    d: &MultiVector,
    alpha: &Scalar,
) -> Result<RankTwoInverse> {
    if alpha.is_zero() {
        return Err(Error::Precondition("rank-two inversion needs a nonzero unit part"));
    }
    if pi.grade() != 2 || lambda.grade() != 2 {
        return Err(Error::GradeMismatch { expected: 2, found: pi.grade().max(lambda.grade()) });
    }
    if pi.proportional_to(lambda) || lambda.proportional_to(pi) {
        return Err(Error::Precondition("the two two-forms must be linearly independent"));
    }
    let pc = pi.pair(c)?;
    let pd = pi.pair(d)?;
    let lc = lambda.pair(c)?;
    let ld = lambda.pair(d)?;
    let det = (&pc + alpha) * (&ld + alpha) - &lc * &pd;
    let recipe = MediumRecipe::RankTwo {
        pi: pi.clone(),
        lambda: lambda.clone(),
        c: c.clone(),
        d: d.clone(),
        alpha: alpha.clone(),
    };
    if det.is_zero() {
        let rank = build(&recipe)?.rank();
        return Err(Error::NoInverse { rank });
    }
    let scale = -(Scalar::one() / (alpha * &det));
    let c_prime = c.scale(&(&ld + alpha)).sub(&d.scale(&lc))?.scale(&scale);
    let d_prime = d.scale(&(&pc + alpha)).sub(&c.scale(&pd))?.scale(&scale);
    let inverse = RankTwoInverse {
        c: c_prime,
        d: d_prime,
        alpha: Scalar::one() / alpha,
    };
    let rebuilt = build(&MediumRecipe::RankTwo {
        pi: pi.clone(),
        lambda: lambda.clone(),
        c: inverse.c.clone(),
        d: inverse.d.clone(),
        alpha: inverse.alpha.clone(),
    })?;
    if build(&recipe)?.compose(&rebuilt)? != unit_bidyadic() {
        return Err(Error::ConventionBug("rank-two inverse failed to compose to the unit"));
    }
    Ok(inverse)
}

// ---------------------------------------------------------------------------
// Quadratic-relation certificates
// ---------------------------------------------------------------------------

/// Does `M_mᵀ·M_m = P·(e_N⌊I⁽²⁾ᵀ)` hold?  Returns the exact verdict together
/// with the unique candidate `P` (read off the `(e12, e34)` entry, where the
/// unit has coefficient `+1`).
pub fn check_p_quadratic(mm: &Dyadic) -> Result<(bool, Scalar)> {
    check_modified(mm)?;
    let square = mm.transpose().dot(mm)?;
    let unit = modified_unit();
    let candidate = &square.mat()[(0, 5)] / &unit.mat()[(0, 5)];
    let holds = square == unit.scale(&candidate);
    Ok((holds, candidate))
}

/// Does `M_mᵀ·M_m − α(M_mᵀ + M_m) = (P − α²)·(e_N⌊I⁽²⁾ᵀ)` hold exactly?
pub fn check_paxion_relation(mm: &Dyadic, alpha: &Scalar, p: &Scalar) -> Result<bool> {
    check_modified(mm)?;
    let lhs = mm
        .transpose()
        .dot(mm)?
        .sub(&mm.transpose().add(mm)?.scale(alpha))?;
    let rhs = modified_unit().scale(&(p - &(alpha * alpha)));
    Ok(lhs == rhs)
}

/// Solve for the unique `(a, b)` with
/// `M_mᵀ·M_m − a(M_mᵀ + M_m) − b·(e_N⌊I⁽²⁾ᵀ) = 0`, if any.
pub fn quadratic_relation(mm: &Dyadic) -> Result<Option<(Scalar, Scalar)>> {
    check_modified(mm)?;
    let square = mm.transpose().dot(mm)?;
    let sum = mm.transpose().add(mm)?;
    let unit = modified_unit();
    let mut system = Mat::zeros(36, 2);
    let mut rhs = Vec::with_capacity(36);
    for i in 0..6 {
        for j in 0..6 {
            system[(6 * i + j, 0)] = sum.mat()[(i, j)].clone();
            system[(6 * i + j, 1)] = unit.mat()[(i, j)].clone();
            rhs.push(square.mat()[(i, j)].clone());
        }
    }
    Ok(system.solve(&rhs).map(|ab| {
        let mut it = ab.into_iter();
        (it.next().expect("two unknowns"), it.next().expect("two unknowns"))
    }))
}

// ---------------------------------------------------------------------------
// Polarization certificate and the P/Q discriminator
// ---------------------------------------------------------------------------

/// The fixed probe set: the four basis one-forms followed by the six
/// pairwise sums, in index order.  These polarize any quadratic map of
/// one-forms exactly.
pub fn default_probes() -> Vec<MultiForm> {
    let mut probes: Vec<MultiForm> = (0..4).map(basis_oneform).collect();
    for i in 0..4 {
        for j in (i + 1)..4 {
            probes.push(
                basis_oneform(i).add(&basis_oneform(j)).expect("same grade"),
            );
        }
    }
    probes
}

/// The ten coefficient maps of `ν ↦ F⌊⌊νν`: diagonal coefficients for
/// `ν_i²` (indices 0–3) followed by cross coefficients for `ν_iν_j`, `i<j`,
/// in lexicographic order.  `F⌊⌊νν = 0` for *all* `ν` iff all ten vanish.
pub fn quadratic_polarization(f: &Dyadic) -> Result<Vec<Dyadic>> {
    check_modified(f)?;
    let diagonal: Vec<Dyadic> = (0..4)
        .map(|i| f.double_contract(&basis_oneform(i)))
        .collect::<Result<_>>()?;
    let mut out = diagonal.clone();
    for i in 0..4 {
        for j in (i + 1)..4 {
            let sum = basis_oneform(i).add(&basis_oneform(j))?;
            out.push(f.double_contract(&sum)?.sub(&diagonal[i])?.sub(&diagonal[j])?);
        }
    }
    Ok(out)
}

/// Decide exactly whether `F⌊⌊νν = 0` for all one-forms `ν` — equivalently,
/// whether `F` is a scalar multiple of `e_N⌊I⁽²⁾ᵀ`.  Both certificates (the
/// ten-fold polarization and the direct proportionality test) are computed
/// and must agree.
pub fn axion_multiple_certificate(f: &Dyadic) -> Result<bool> {
    let via_polarization = quadratic_polarization(f)?.iter().all(Dyadic::is_zero);
    let unit = modified_unit();
    let k = &f.mat()[(0, 5)] / &unit.mat()[(0, 5)];
    let via_proportionality = *f == unit.scale(&k);
    if via_polarization != via_proportionality {
        return Err(Error::ConventionBug("axion-multiple certificates disagree"));
    }
    Ok(via_polarization)
}

/// Outcome of the P-versus-Q discriminator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiscriminatorBranch {
    /// Some probe keeps the third compound of `M_m⌊⌊αα` nonzero: the medium
    /// is a Q-solution of the quadratic relation (symmetric grade-1 map).
    QSolution,
    /// Third compounds vanish, some second compound survives: P-solution.
    PSolution,
    /// Second compounds vanish but the contraction itself survives:
    /// Q-solution with antisymmetric grade-1 map.
    AntisymmetricQ,
    /// `M_m⌊⌊αα = 0` identically: P is a scalar multiple of the identity.
    ScalarP,
}

impl DiscriminatorBranch {
    pub fn label(self) -> &'static str {
        match self {
            DiscriminatorBranch::QSolution => "Q-solution",
            DiscriminatorBranch::PSolution => "P-solution",
            DiscriminatorBranch::AntisymmetricQ => "Q-solution (antisymmetric)",
            DiscriminatorBranch::ScalarP => "P-solution (scalar identity)",
        }
    }
}

impl fmt::Display for DiscriminatorBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// For a full-rank `M_m` satisfying the quadratic relation, decide which
/// solution family it belongs to by probing `t = M_m⌊⌊αα` over the probe
/// set: a nonzero `t⁽³⁾` witnesses a Q-solution; otherwise a nonzero `t⁽²⁾`
/// a P-solution; otherwise a nonzero `t` an antisymmetric-Q solution;
/// otherwise `P` is a scalar multiple of the identity (cross-checked with
/// [`axion_multiple_certificate`]).
pub fn pq_discriminate(mm: &Dyadic, probes: &[MultiForm]) -> Result<DiscriminatorBranch> {
    check_modified(mm)?;
    if probes.is_empty() {
        return Err(Error::Precondition("the discriminator needs at least one probe"));
    }
    if mm.rank() != 6 {
        return Err(Error::Precondition("the discriminator needs a full-rank modified map"));
    }
    if !check_p_quadratic(mm)?.0 {
        return Err(Error::NotApplicable("the map does not satisfy the quadratic relation"));
    }
    let contractions: Vec<Dyadic> = probes
        .iter()
        .map(|nu| mm.double_contract(nu))
        .collect::<Result<_>>()?;
    for t in &contractions {
        if !t.compound(3)?.is_zero() {
            return Ok(DiscriminatorBranch::QSolution);
        }
    }
    for t in &contractions {
        if !t.compound(2)?.is_zero() {
            return Ok(DiscriminatorBranch::PSolution);
        }
    }
    if contractions.iter().any(|t| !t.is_zero()) {
        return Ok(DiscriminatorBranch::AntisymmetricQ);
    }
    if !axion_multiple_certificate(mm)? {
        return Err(Error::ConventionBug("probe contractions vanished off the unit line"));
    }
    Ok(DiscriminatorBranch::ScalarP)
}

// ---------------------------------------------------------------------------
// Affine transport
// ---------------------------------------------------------------------------

/// Transport a constitutive map along an invertible grade-1 map `A` of
/// vectors: `M_a = A⁽⁻²⁾ᵀ | M | A⁽²⁾ᵀ`.  Class membership of every family
/// is preserved.
pub fn affine_transform(m: &Dyadic, a: &Dyadic) -> Result<Dyadic> {
    check_constitutive(m)?;
    check_grade1_map(a, Kind::Vector)?;
    let forward = a.compound(2)?.transpose();
    let backward = a.inverse()?.compound(2)?.transpose();
    backward.compose(m)?.compose(&forward)
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

/// The exact rank-two factorization recovered by the classifier:
/// `M = Π c + Λ d + α·I⁽²⁾ᵀ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankTwoFactors {
    pub pi: MultiForm,
    pub lambda: MultiForm,
    pub c: MultiVector,
    pub d: MultiVector,
    pub alpha: Scalar,
}

/// Structural class of a constitutive map, as recognised by exact tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructuralClass {
    Axion { alpha: Scalar },
    Skewon,
    SkewonAxion { alpha: Scalar },
    PMedium { p: Scalar },
    SpecialPAxion { alpha: Scalar },
    GeneralPAxion { alpha: Scalar, p: Scalar },
    RankTwo(RankTwoFactors),
    /// Dispersion-free, but matching none of the constructive families.
    DispersionFreeUnrecognized,
    NotDispersionFree,
}

impl StructuralClass {
    pub fn label(&self) -> &'static str {
        match self {
            StructuralClass::Axion { .. } => "axion",
            StructuralClass::Skewon => "skewon",
            StructuralClass::SkewonAxion { .. } => "skewon-axion",
            StructuralClass::PMedium { .. } => "P-medium",
            StructuralClass::SpecialPAxion { .. } => "special P-axion",
            StructuralClass::GeneralPAxion { .. } => "general P-axion",
            StructuralClass::RankTwo(_) => "rank-two",
            StructuralClass::DispersionFreeUnrecognized => "dispersion-free (unrecognized)",
            StructuralClass::NotDispersionFree => "not dispersion-free",
        }
    }
}

impl fmt::Display for StructuralClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Everything the classifier can say about one map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationVerdict {
    pub dispersion_free: bool,
    pub class: StructuralClass,
    /// Discriminator branch, when the map is full-rank and satisfies the
    /// quadratic relation.
    pub discriminator: Option<DiscriminatorBranch>,
    /// Structural class of the inverse, when one exists.
    pub inverse_class: Option<StructuralClass>,
}

fn three_subsets() -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(20);
    for i in 0..6 {
        for j in (i + 1)..6 {
            for k in (j + 1)..6 {
                out.push([i, j, k]);
            }
        }
    }
    out
}

fn minor3(m: &Mat, rows: &[usize; 3], cols: &[usize; 3]) -> Scalar {
    let e = |r: usize, c: usize| &m[(rows[r], cols[c])];
    e(0, 0) * &(e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
        - e(0, 1) * &(e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
        + e(0, 2) * &(e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
}

/// Rational values of `α` for which `rank(M − α·I⁽²⁾ᵀ) ≤ 2`: the common
/// rational roots of all 400 cubic 3×3-minor polynomials of `M − α·I`,
/// recovered by exact interpolation at `α = 0..3` followed by an incremental
/// gcd with early exit.
fn rank_two_alpha_candidates(m: &Mat) -> Vec<Scalar> {
    let subsets = three_subsets();
    let points: Vec<Scalar> = (0..4).map(int).collect();
    let shifted: Vec<Mat> = points
        .iter()
        .map(|t| m.sub(&Mat::identity(6).scale(t)))
        .collect();
    let mut g = QPoly::zero();
    for rows in &subsets {
        for cols in &subsets {
            let values: Vec<(Scalar, Scalar)> = points
                .iter()
                .zip(&shifted)
                .map(|(t, sm)| (t.clone(), minor3(sm, rows, cols)))
                .collect();
            if values.iter().all(|(_, v)| v.is_zero()) {
                continue;
            }
            g = g.gcd(&QPoly::interpolate(&values));
            if g.degree() == Some(0) {
                return Vec::new();
            }
        }
    }
    if g.is_zero() {
        return Vec::new();
    }
    g.square_free_part().rational_roots()
}

/// Try to factor `M − α·I⁽²⁾ᵀ` (of rank 1 or 2) as `Π c + Λ d` via the
/// reduced echelon form; pivots make the factorization exact and canonical.
fn rank_two_factors_at(m: &Dyadic, alpha: &Scalar) -> Result<Option<RankTwoFactors>> {
    let remainder = m.sub(&unit_bidyadic().scale(alpha))?;
    let (echelon, pivots) = remainder.mat().rref();
    let factors = match pivots.len() {
        1 => {
            let pi = MultiForm::new(2, remainder.mat().col(pivots[0]))?;
            let c = MultiVector::new(2, echelon.row(0).to_vec())?;
            let lambda = (0..6)
                .map(|i| MultiForm::basis(2, i))
                .find(|b| !pi.proportional_to(b))
                .expect("a nonzero two-form cannot span all six basis directions");
            RankTwoFactors { pi, lambda, c, d: MultiVector::zero(2), alpha: alpha.clone() }
        }
        2 => RankTwoFactors {
            pi: MultiForm::new(2, remainder.mat().col(pivots[0]))?,
            lambda: MultiForm::new(2, remainder.mat().col(pivots[1]))?,
            c: MultiVector::new(2, echelon.row(0).to_vec())?,
            d: MultiVector::new(2, echelon.row(1).to_vec())?,
            alpha: alpha.clone(),
        },
        _ => return Ok(None),
    };
    let rebuilt = build(&MediumRecipe::RankTwo {
        pi: factors.pi.clone(),
        lambda: factors.lambda.clone(),
        c: factors.c.clone(),
        d: factors.d.clone(),
        alpha: factors.alpha.clone(),
    })?;
    Ok((rebuilt == *m).then_some(factors))
}

/// Recognise the structural class of a constitutive map by exact tests, in
/// order: dispersion-freedom, unit multiple, skewon-axion (symmetric part of
/// `M_m` on the unit line), the quadratic relation, and the rank-two
/// factorization with rational `α`.
pub fn structural_class(m: &Dyadic) -> Result<StructuralClass> {
    check_constitutive(m)?;
    if !is_dispersion_free(m)? {
        return Ok(StructuralClass::NotDispersionFree);
    }
    let alpha = m.trace()? / int(6);
    if *m == unit_bidyadic().scale(&alpha) {
        return Ok(StructuralClass::Axion { alpha });
    }
    let mm = modified_from_constitutive(m)?;
    let symmetric = mm.symmetric_part()?;
    if let Some(k) = proportionality_factor(modified_unit().mat(), symmetric.mat()) {
        return Ok(if k.is_zero() {
            StructuralClass::Skewon
        } else {
            StructuralClass::SkewonAxion { alpha: k }
        });
    }
    if let Some((a, b)) = quadratic_relation(&mm)? {
        // The relation alone is necessary but not sufficient: media built
        // from an antisymmetric grade-1 map also satisfy it, yet they belong
        // to the rank-two family.  Among dispersion-free media the two sides
        // separate exactly by the dispersion dyadic's rank: the P-family
        // shows a probe with a nonzero second compound, while the
        // antisymmetric side keeps every dispersion dyadic at rank ≤ 1.
        let mut witness = false;
        for nu in default_probes() {
            if !mm.double_contract(&nu)?.compound(2)?.is_zero() {
                witness = true;
                break;
            }
        }
        if witness {
            return Ok(if a.is_zero() {
                StructuralClass::PMedium { p: b }
            } else if b.is_zero() {
                StructuralClass::SpecialPAxion { alpha: a }
            } else {
                let p = &a * &a + &b;
                StructuralClass::GeneralPAxion { alpha: a, p }
            });
        }
    }
    for alpha in rank_two_alpha_candidates(m.mat()) {
        if let Some(factors) = rank_two_factors_at(m, &alpha)? {
            return Ok(StructuralClass::RankTwo(factors));
        }
    }
    Ok(StructuralClass::DispersionFreeUnrecognized)
}

/// Full classification: structural class, discriminator branch where
/// applicable, and the structural class of the inverse when one exists.
pub fn classify_raw(m: &Dyadic) -> Result<ClassificationVerdict> {
    check_constitutive(m)?;
    let class = structural_class(m)?;
    let dispersion_free = !matches!(class, StructuralClass::NotDispersionFree);
    let mm = modified_from_constitutive(m)?;
    let discriminator = if mm.rank() == 6 && check_p_quadratic(&mm)?.0 {
        Some(pq_discriminate(&mm, &default_probes())?)
    } else {
        None
    };
    let inverse_class = match m.inverse() {
        Ok(n) => Some(structural_class(&n)?),
        Err(_) => None,
    };
    Ok(ClassificationVerdict { dispersion_free, class, discriminator, inverse_class })
}

/// Classify a map and its inverse; errors with the exact rank when the map
/// is singular.
pub fn inverse_class_map(m: &Dyadic) -> Result<(StructuralClass, StructuralClass)> {
    check_constitutive(m)?;
    let m_class = structural_class(m)?;
    let n = m.inverse()?;
    let n_class = structural_class(&n)?;
    Ok((m_class, n_class))
}
