//! The dispersion dyadic of a medium, the scalar quartic it induces on wave
//! one-forms, exact extraction of the quartic's 35 coefficients, and exact
//! plane-wave construction.
//!
//! For a constitutive map `M` on two-forms and a wave one-form `ν`, the
//! dispersion dyadic is
//!
//! ```text
//! D(ν) = e_N⌊(ν ∧ M⌊ν) = M_m⌊⌊νν,        M_m = e_N⌊M,
//! ```
//!
//! a map from one-forms to vectors that annihilates `ν` on both sides.  A
//! plane wave with this `ν` exists whenever `D(ν)` kills a potential
//! one-form independent of `ν`, which forces `rank D(ν) ≤ 2`, i.e. the
//! vanishing of the third compound.  That condition collapses to a single
//! scalar quartic in `ν` — computed here in both of its product forms, which
//! are asserted equal on every call:
//!
//! ```text
//! (1/3)·ε_N ε_N || (M_m ∧∧ D⁽²⁾(ν))
//!   = (1/6)·ε_N ε_N || (M_m ∧∧ (νν⌋⌋(M_m ∧∧ (νν⌋⌋M_m)))).
//! ```
//!
//! "The medium imposes no dispersion equation" is decided exactly: the
//! quartic's full coefficient tensor is extracted by evaluating at 35 fixed
//! integer points (the multiplicity vectors of the 35 degree-4 monomials — a
//! principal lattice, hence unisolvent) and solving one cached exact linear
//! system; the medium is dispersion-free iff every coefficient is zero.

use alloc::boxed::Box;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::dyadic::{
    complement_both, complement_map, dyad_vector_vector, hook_vector_map,
    modified_from_constitutive, wedge_form_map, Dyadic, Space,
};
use crate::exterior::{en, MultiForm, MultiVector};
use crate::linalg::Mat;
use crate::qpoly::QPoly;
use crate::scalar::{int, ratio, Scalar, Zero};
use crate::{Error, Result};

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

fn check_wave_form(nu: &MultiForm) -> Result<()> {
    if nu.grade() != 1 {
        return Err(Error::GradeMismatch { expected: 1, found: nu.grade() });
    }
    Ok(())
}

/// The dispersion dyadic `D(ν)` of a constitutive map on two-forms.
///
/// Both construction routes — the hook route `e_N⌊(ν ∧ M⌊ν)` and the double
/// contraction `(e_N⌊M)⌊⌊νν` — are computed and compared; they agree by the
/// frozen sign conventions, so a mismatch reports a convention bug rather
/// than returning either value.
pub fn dispersion_dyadic(m: &Dyadic, nu: &MultiForm) -> Result<Dyadic> {
    check_constitutive(m)?;
    check_wave_form(nu)?;
    // Hook route: hook ν into the input slot, wedge ν onto the output slot,
    // complement the resulting three-form slot down to vectors.
    let input_hooked = m.compose(&hook_vector_map(nu, 2)?.transpose())?;
    let wedged = wedge_form_map(nu, 2)?.compose(&input_hooked)?;
    let via_hooks = complement_map(Space::forms(3)).compose(&wedged)?;
    // Contraction route, through the modified map.
    let via_contraction = modified_from_constitutive(m)?.double_contract(nu)?;
    if via_hooks != via_contraction {
        return Err(Error::ConventionBug("dispersion dyadic routes disagree"));
    }
    Ok(via_contraction)
}

/// The dispersion scalar of a *modified* (bivector-valued) medium map at a
/// wave one-form, computed in both printed forms and asserted equal.
pub fn fresnel_scalar(mm: &Dyadic, nu: &MultiForm) -> Result<Scalar> {
    check_modified(mm)?;
    check_wave_form(nu)?;
    let d = mm.double_contract(nu)?;
    // Form 1: (1/3)·εε||(M_m ∧∧ D⁽²⁾).
    let first = mm.double_wedge(&d.compound(2)?)?.double_pair()? * ratio(1, 3);
    // Form 2: (1/6)·εε||(M_m ∧∧ ((M_m ∧∧ D)⌊⌊νν)).
    let inner = mm.double_wedge(&d)?.double_contract(nu)?;
    let second = mm.double_wedge(&inner)?.double_pair()? * ratio(1, 6);
    if first != second {
        return Err(Error::ConventionBug("the two dispersion-scalar forms disagree"));
    }
    Ok(first)
}

/// The dispersion scalar of the inverse-side medium map; the formula is the
/// same, applied to the modified inverse `N_m`.
pub fn fresnel_scalar_n(nm: &Dyadic, nu: &MultiForm) -> Result<Scalar> {
    fresnel_scalar(nm, nu)
}

/// The modified version of the inverse medium: `N_m` obtained by hooking
/// `e_N` into both slots of `M_m⁻¹`.  Fails with the exact rank when the
/// medium is singular.
pub fn modified_of_inverse(mm: &Dyadic) -> Result<Dyadic> {
    check_modified(mm)?;
    complement_both(&mm.inverse()?)
}

/// Sorted index multisets of the 35 degree-4 monomials in 4 variables, in
/// lexicographic order; the key order of every quartic coefficient list.
pub fn quartic_multisets() -> Vec<[u8; 4]> {
    let mut out = Vec::with_capacity(35);
    for i in 0..4u8 {
        for j in i..4 {
            for k in j..4 {
                for l in k..4 {
                    out.push([i, j, k, l]);
                }
            }
        }
    }
    out
}

fn multiplicities(m: &[u8; 4]) -> [u8; 4] {
    let mut mult = [0u8; 4];
    for &i in m {
        mult[i as usize] += 1;
    }
    mult
}

/// `4! / ∏ mult_i!`: how many index orderings share a sorted multiset.
fn orderings(m: &[u8; 4]) -> i64 {
    let mult = multiplicities(m);
    let fact = [1i64, 1, 2, 6, 24];
    24 / mult.iter().map(|&c| fact[c as usize]).product::<i64>()
}

/// A homogeneous quartic form on wave one-forms, stored as the 35
/// independent entries of its symmetric rank-4 coefficient tensor, keyed by
/// [`quartic_multisets`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticForm {
    tensor: Vec<Scalar>,
}

impl QuarticForm {
    pub fn zero() -> QuarticForm {
        QuarticForm { tensor: crate::scalar::zeros(35) }
    }

    pub fn from_tensor_entries(tensor: Vec<Scalar>) -> Result<QuarticForm> {
        if tensor.len() != 35 {
            return Err(Error::Precondition("a quartic form has exactly 35 tensor entries"));
        }
        Ok(QuarticForm { tensor })
    }

    /// Symmetric-tensor entries `T_m` (one per sorted multiset).
    pub fn tensor_entries(&self) -> &[Scalar] {
        &self.tensor
    }

    /// Monomial coefficients: `evaluate(ν) = Σ_m monomial_coefficient(m)·ν^m`.
    pub fn monomial_coefficients(&self) -> Vec<Scalar> {
        quartic_multisets()
            .iter()
            .zip(&self.tensor)
            .map(|(m, t)| t * int(orderings(m)))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.tensor.iter().all(|t| t.is_zero())
    }

    pub fn evaluate(&self, nu: &MultiForm) -> Result<Scalar> {
        check_wave_form(nu)?;
        let c = nu.coords();
        let mut acc = Scalar::zero();
        for (m, t) in quartic_multisets().iter().zip(&self.tensor) {
            if t.is_zero() {
                continue;
            }
            let mut term = t * int(orderings(m));
            for &i in m {
                term *= &c[i as usize];
            }
            acc += term;
        }
        Ok(acc)
    }

    /// The univariate polynomial `t ↦ evaluate(offset + t·dir)`, recovered
    /// exactly from five point evaluations.
    pub fn restrict_line(&self, dir: &MultiForm, offset: &MultiForm) -> Result<QPoly> {
        check_wave_form(dir)?;
        check_wave_form(offset)?;
        let mut points = Vec::with_capacity(5);
        for t in -2..=2i64 {
            let nu = offset.add(&dir.scale(&int(t)))?;
            points.push((int(t), self.evaluate(&nu)?));
        }
        Ok(QPoly::interpolate(&points))
    }
}

/// The 35 fixed integer evaluation points: point `p` for multiset `m` has
/// `p_i =` multiplicity of `i` in `m` (the principal lattice of degree 4).
pub fn polarization_points() -> Vec<[u8; 4]> {
    quartic_multisets().iter().map(multiplicities).collect()
}

fn polarization_matrix() -> Mat {
    let multisets = quartic_multisets();
    let points = polarization_points();
    Mat::from_fn(35, 35, |p, q| {
        let mut v = int(orderings(&multisets[q]));
        for &i in &multisets[q] {
            v *= int(points[p][i as usize] as i64);
        }
        v
    })
}

static POLARIZATION_INVERSE: OnceBox<Mat> = OnceBox::new();

fn polarization_inverse() -> Result<&'static Mat> {
    if let Some(inv) = POLARIZATION_INVERSE.get() {
        return Ok(inv);
    }
    let inv = polarization_matrix()
        .inverse()
        .map_err(|_| Error::ConventionBug("polarization points failed to be unisolvent"))?;
    let _ = POLARIZATION_INVERSE.set(Box::new(inv));
    Ok(POLARIZATION_INVERSE.get().expect("value was just stored"))
}

/// Extract the exact symmetric coefficient tensor of the dispersion quartic
/// of a modified medium map: 35 evaluations of [`fresnel_scalar`] at the
/// fixed points, one cached exact linear solve.
pub fn extract_quartic(mm: &Dyadic) -> Result<QuarticForm> {
    check_modified(mm)?;
    let values: Vec<Scalar> = polarization_points()
        .iter()
        .map(|p| {
            let coords = p.iter().map(|&x| int(x as i64)).collect();
            fresnel_scalar(mm, &MultiForm::new(1, coords)?)
        })
        .collect::<Result<_>>()?;
    let tensor = polarization_inverse()?.mul_vec(&values);
    QuarticForm::from_tensor_entries(tensor)
}

/// Exact decision: does the medium impose no dispersion equation at all?
/// (All 35 quartic coefficients vanish.)  Takes the constitutive map.
pub fn is_dispersion_free(m: &Dyadic) -> Result<bool> {
    check_constitutive(m)?;
    is_dispersion_free_modified(&modified_from_constitutive(m)?)
}

/// As [`is_dispersion_free`], for a modified (bivector-valued) medium map.
pub fn is_dispersion_free_modified(mm: &Dyadic) -> Result<bool> {
    Ok(extract_quartic(mm)?.is_zero())
}

/// Exact ranks of the dispersion dyadic over a sample of wave one-forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankProfile {
    pub per_sample: Vec<usize>,
    pub min: usize,
    pub max: usize,
    /// Necessary condition for dispersion-freedom on the sampled set.
    pub all_at_most_two: bool,
}

/// Rank of `D(ν)` for each sample one-form, with min/max summary.
pub fn rank_profile(m: &Dyadic, samples: &[MultiForm]) -> Result<RankProfile> {
    check_constitutive(m)?;
    if samples.is_empty() {
        return Err(Error::Precondition("rank profile needs at least one sample"));
    }
    let mm = modified_from_constitutive(m)?;
    let mut per_sample = Vec::with_capacity(samples.len());
    for nu in samples {
        check_wave_form(nu)?;
        per_sample.push(mm.double_contract(nu)?.rank());
    }
    let min = *per_sample.iter().min().expect("nonempty");
    let max = *per_sample.iter().max().expect("nonempty");
    Ok(RankProfile { per_sample, min, max, all_at_most_two: max <= 2 })
}

/// A plane wave admitted by a medium: the wave one-form, a potential
/// one-form independent of it, and the two field two-forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneWave {
    pub nu: MultiForm,
    /// Potential one-form `φ` with `D(ν)|φ = 0`, not proportional to `ν`.
    pub potential: MultiForm,
    /// `Φ = ν ∧ φ`, the first field two-form.
    pub field: MultiForm,
    /// `Ψ = M|Φ`, the second field two-form; satisfies `ν ∧ Ψ = 0`.
    pub response: MultiForm,
}

/// Solve for a plane wave with the given wave one-form, exactly.
///
/// The null space of `D(ν)` always contains `ν`; a wave exists iff it
/// contains something more.  The potential is chosen deterministically: the
/// reduced-echelon null-space generator with the lowest free index that is
/// not proportional to `ν`.
pub fn plane_wave_solve(m: &Dyadic, nu: &MultiForm) -> Result<PlaneWave> {
    check_constitutive(m)?;
    check_wave_form(nu)?;
    if nu.is_zero() {
        return Err(Error::Precondition("the wave one-form must be nonzero"));
    }
    let d = dispersion_dyadic(m, nu)?;
    let potential = d
        .mat()
        .nullspace()
        .into_iter()
        .map(|coords| MultiForm::new(1, coords).expect("null vectors have 4 coordinates"))
        .find(|phi| !nu.proportional_to(phi))
        .ok_or(Error::NoWave)?;
    let field = nu.wedge(&potential)?;
    let response = m.apply_form(&field)?.expect_form();
    if !nu.wedge(&response)?.is_zero() {
        return Err(Error::ConventionBug("plane-wave response fails the wave condition"));
    }
    Ok(PlaneWave { nu: nu.clone(), potential, field, response })
}

/// `e_N⌊ν` as a trivector — the factor through which the third compound of
/// the dispersion dyadic becomes the dispersion scalar:
/// `D⁽³⁾(ν) = (e_N⌊ν)(e_N⌊ν)·fresnel_scalar(M_m, ν)`.
pub fn en_hook(nu: &MultiForm) -> Result<MultiVector> {
    check_wave_form(nu)?;
    en().hook(nu)
}

/// The dyadic `(e_N⌊ν)(e_N⌊ν)` scaled by `s` (the right-hand side of the
/// third-compound factorization).
pub fn third_compound_factor(nu: &MultiForm, s: &Scalar) -> Result<Dyadic> {
    let t = en_hook(nu)?;
    Ok(dyad_vector_vector(&t, &t).scale(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::basis_oneform;

    fn oneform(c: [i64; 4]) -> MultiForm {
        MultiForm::new(1, c.iter().map(|&x| int(x)).collect()).unwrap()
    }

    fn dense_m() -> Dyadic {
        Dyadic::from_int_rows(
            Space::forms(2),
            Space::forms(2),
            &[
                &[2, 1, 0, -1, 3, 0],
                &[0, 1, 2, 0, 1, -2],
                &[1, 0, 3, 1, 0, 1],
                &[-1, 2, 0, 1, 1, 0],
                &[0, 1, 1, 0, 2, 1],
                &[1, 0, -1, 2, 0, 3],
            ],
        )
        .unwrap()
    }

    #[test]
    fn axion_medium_has_zero_dispersion_dyadic() {
        let m = Dyadic::identity(Space::forms(2)).scale(&int(7));
        for nu in [oneform([1, 0, 0, 0]), oneform([3, -2, 5, 1])] {
            let d = dispersion_dyadic(&m, &nu).unwrap();
            assert!(d.is_zero());
        }
        assert!(is_dispersion_free(&m).unwrap());
    }

    #[test]
    fn dispersion_dyadic_annihilates_nu_on_both_sides() {
        let m = dense_m();
        let nu = oneform([2, -1, 3, 5]);
        let d = dispersion_dyadic(&m, &nu).unwrap();
        assert!(d.apply_form(&nu).unwrap().expect_vector().is_zero());
        assert!(d.transpose().apply_form(&nu).unwrap().expect_vector().is_zero());
    }

    #[test]
    fn third_compound_factors_through_the_scalar() {
        let m = dense_m();
        let mm = modified_from_constitutive(&m).unwrap();
        let nu = oneform([1, 2, 0, -3]);
        let d = dispersion_dyadic(&m, &nu).unwrap();
        let s = fresnel_scalar(&mm, &nu).unwrap();
        assert_eq!(d.compound(3).unwrap(), third_compound_factor(&nu, &s).unwrap());
    }

    #[test]
    fn quartic_extraction_reproduces_the_scalar() {
        let mm = modified_from_constitutive(&dense_m()).unwrap();
        let q = extract_quartic(&mm).unwrap();
        assert!(!q.is_zero());
        for nu in [oneform([1, 1, 1, 1]), oneform([0, 2, -1, 3]), oneform([5, 0, 0, -2])] {
            assert_eq!(q.evaluate(&nu).unwrap(), fresnel_scalar(&mm, &nu).unwrap());
        }
    }

    #[test]
    fn signature_medium_yields_the_squared_light_cone() {
        // Q = diag(1,1,1,-1) as a grade-1 map, modified medium Q^(2):
        // the dispersion scalar is -(ν1²+ν2²+ν3²−ν4²)².
        let q = Dyadic::from_int_rows(
            Space::vectors(1),
            Space::forms(1),
            &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, -1]],
        )
        .unwrap();
        let mm = q.compound(2).unwrap();
        let quartic = extract_quartic(&mm).unwrap();
        for nu in [oneform([1, 0, 0, 0]), oneform([3, 0, 0, 5]), oneform([1, 2, 2, 3])] {
            let c = nu.coords();
            let cone = &c[0] * &c[0] + &c[1] * &c[1] + &c[2] * &c[2] - &c[3] * &c[3];
            assert_eq!(quartic.evaluate(&nu).unwrap(), -(&cone * &cone));
        }
    }

    #[test]
    fn homogeneity_of_the_extracted_quartic() {
        let mm = modified_from_constitutive(&dense_m()).unwrap();
        let q = extract_quartic(&mm).unwrap();
        let nu = oneform([1, -2, 4, 3]);
        let t = ratio(5, 3);
        let scaled = nu.scale(&t);
        let expected = crate::scalar::pow_u(&t, 4) * q.evaluate(&nu).unwrap();
        assert_eq!(q.evaluate(&scaled).unwrap(), expected);
    }

    #[test]
    fn plane_wave_found_for_axion_and_rejected_off_surface() {
        let axion = Dyadic::identity(Space::forms(2)).scale(&int(3));
        let nu = oneform([2, 1, -1, 4]);
        let wave = plane_wave_solve(&axion, &nu).unwrap();
        assert!(!wave.field.is_zero());
        assert_eq!(wave.response, wave.field.scale(&int(3)));
        assert!(nu.wedge(&wave.response).unwrap().is_zero());

        // Dense medium, generic ν: off the quartic surface, so no wave.
        let m = dense_m();
        let nu = oneform([1, 0, 0, 0]);
        let mm = modified_from_constitutive(&m).unwrap();
        assert!(!fresnel_scalar(&mm, &nu).unwrap().is_zero());
        assert!(matches!(plane_wave_solve(&m, &nu), Err(Error::NoWave)));
    }

    #[test]
    fn rank_profile_of_axion_is_zero() {
        let m = Dyadic::identity(Space::forms(2)).scale(&int(2));
        let samples: Vec<MultiForm> = (0..4).map(basis_oneform).collect();
        let p = rank_profile(&m, &samples).unwrap();
        assert_eq!(p.per_sample, [0, 0, 0, 0]);
        assert!(p.all_at_most_two);
        assert!(rank_profile(&m, &[]).is_err());
    }

    #[test]
    fn restrict_line_matches_direct_evaluation() {
        let mm = modified_from_constitutive(&dense_m()).unwrap();
        let q = extract_quartic(&mm).unwrap();
        let dir = oneform([1, 2, 0, 0]);
        let offset = oneform([0, 0, 1, 3]);
        let p = q.restrict_line(&dir, &offset).unwrap();
        for t in [-3i64, 0, 1, 7] {
            let nu = offset.add(&dir.scale(&int(t))).unwrap();
            assert_eq!(p.eval(&int(t)), q.evaluate(&nu).unwrap());
        }
    }

    #[test]
    fn zero_wave_form_is_rejected() {
        let m = dense_m();
        assert!(matches!(
            plane_wave_solve(&m, &MultiForm::zero(1)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn inverse_side_modified_map_matches_composition() {
        let m = dense_m();
        let mm = modified_from_constitutive(&m).unwrap();
        let nm = modified_of_inverse(&mm).unwrap();
        // N_m composed with the complement of M_m must be the bivector unit:
        // N_m|(ε_N⌊(M_m|Φ)) = e_N⌊Φ.
        let chain = nm.compose(&complement_map(Space::vectors(2)).compose(&mm).unwrap()).unwrap();
        assert_eq!(chain, complement_map(Space::forms(2)));
    }
}
