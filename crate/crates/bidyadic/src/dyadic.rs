//! Dyadics: exact linear maps between graded spaces, with the calculus the
//! medium analysis runs on — composition, transposition, double-wedge
//! products, compound (exterior) powers, double contractions, complement
//! maps, and the natural dot product.
//!
//! A dyadic is stored in *map form*: `out` is the space of values, `input`
//! the space of arguments, and `mat` the matrix acting on coordinates.  In
//! tensor language the first factor is `out` and the second factor is the
//! dual of `input`; the matrix entries are exactly the dyad coefficients in
//! the canonical bases, so `transpose` (which swaps tensor factors) maps
//! `{out, input, mat}` to `{dual(input), dual(out), matᵀ}`.
//!
//! Space kinds and grades are enforced at runtime: every operation checks
//! its operands and returns [`Error::SpaceMismatch`] (or a grade error)
//! rather than producing a value in the wrong space.
//!
//! The complement maps built here (hooking the unit quadrivector `e_N` into
//! forms, or the unit four-form `ε_N` into multivectors) are the single
//! source of truth for complement-sign bookkeeping: conversions between a
//! constitutive map on two-forms and its modified (bivector-valued) version
//! go through [`modified_from_constitutive`] / [`constitutive_from_modified`]
//! and nowhere else.

use alloc::vec::Vec;
use core::fmt;

use crate::basis::{self, MASKS};
use crate::exterior::{Kind, MultiForm, MultiVector};
use crate::linalg::Mat;
use crate::scalar::{ratio, Scalar, Zero};
use crate::{Error, Result};

/// A graded space descriptor: multivectors or multiforms of one grade.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Space {
    kind: Kind,
    grade: u8,
}

impl Space {
    pub fn vectors(grade: u8) -> Space {
        assert!(grade <= 4, "grade must be 0..=4");
        Space { kind: Kind::Vector, grade }
    }

    pub fn forms(grade: u8) -> Space {
        assert!(grade <= 4, "grade must be 0..=4");
        Space { kind: Kind::Form, grade }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn grade(&self) -> u8 {
        self.grade
    }

    pub fn dim(&self) -> usize {
        basis::GRADE_DIMS[self.grade as usize]
    }

    /// The space whose elements pair with this one (same grade, other kind).
    pub fn dual(&self) -> Space {
        Space { kind: self.kind.dual(), grade: self.grade }
    }

    /// The complement space: other kind, grade `4 − g`.
    pub fn complement(&self) -> Space {
        Space { kind: self.kind.dual(), grade: 4 - self.grade }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.grade)
    }
}

/// A multivector or multiform, for operations whose output kind is only
/// known at runtime (see [`Dyadic::apply_form`] / [`Dyadic::apply_vector`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Graded {
    Vector(MultiVector),
    Form(MultiForm),
}

impl Graded {
    pub fn space(&self) -> Space {
        match self {
            Graded::Vector(x) => Space::vectors(x.grade()),
            Graded::Form(x) => Space::forms(x.grade()),
        }
    }

    /// Unwrap a vector-kind value; panics on a form (a kind error here is a
    /// caller bug, not a data condition).
    pub fn expect_vector(self) -> MultiVector {
        match self {
            Graded::Vector(x) => x,
            Graded::Form(_) => panic!("expected a multivector, found a multiform"),
        }
    }

    /// Unwrap a form-kind value; panics on a vector.
    pub fn expect_form(self) -> MultiForm {
        match self {
            Graded::Form(x) => x,
            Graded::Vector(_) => panic!("expected a multiform, found a multivector"),
        }
    }
}

/// An exact linear map `input → out` between graded spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dyadic {
    out: Space,
    input: Space,
    mat: Mat,
}

impl Dyadic {
    /// Wrap a matrix as a map; the shape must match the space dimensions.
    pub fn new(out: Space, input: Space, mat: Mat) -> Result<Dyadic> {
        if mat.rows() != out.dim() || mat.cols() != input.dim() {
            return Err(Error::Shape {
                expected: (out.dim(), input.dim()),
                found: (mat.rows(), mat.cols()),
            });
        }
        Ok(Dyadic { out, input, mat })
    }

    pub fn from_int_rows(out: Space, input: Space, rows: &[&[i64]]) -> Result<Dyadic> {
        Dyadic::new(out, input, Mat::from_int_rows(rows))
    }

    pub fn zero(out: Space, input: Space) -> Dyadic {
        Dyadic { out, input, mat: Mat::zeros(out.dim(), input.dim()) }
    }

    /// The identity map on a space (the grade-`g` unit dyadic).
    pub fn identity(space: Space) -> Dyadic {
        Dyadic { out: space, input: space, mat: Mat::identity(space.dim()) }
    }

    pub fn out(&self) -> Space {
        self.out
    }

    pub fn input(&self) -> Space {
        self.input
    }

    pub fn mat(&self) -> &Mat {
        &self.mat
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    pub fn add(&self, other: &Dyadic) -> Result<Dyadic> {
        self.check_same_spaces(other)?;
        Ok(Dyadic { out: self.out, input: self.input, mat: self.mat.add(&other.mat) })
    }

    pub fn sub(&self, other: &Dyadic) -> Result<Dyadic> {
        self.check_same_spaces(other)?;
        Ok(Dyadic { out: self.out, input: self.input, mat: self.mat.sub(&other.mat) })
    }

    pub fn neg(&self) -> Dyadic {
        Dyadic { out: self.out, input: self.input, mat: self.mat.neg() }
    }

    pub fn scale(&self, s: &Scalar) -> Dyadic {
        Dyadic { out: self.out, input: self.input, mat: self.mat.scale(s) }
    }

    fn check_same_spaces(&self, other: &Dyadic) -> Result<()> {
        if self.out != other.out {
            return Err(Error::SpaceMismatch { expected: self.out, found: other.out });
        }
        if self.input != other.input {
            return Err(Error::SpaceMismatch { expected: self.input, found: other.input });
        }
        Ok(())
    }

    /// Composition `self | other` (apply `other` first).
    pub fn compose(&self, other: &Dyadic) -> Result<Dyadic> {
        if self.input != other.out {
            return Err(Error::SpaceMismatch { expected: self.input, found: other.out });
        }
        Ok(Dyadic { out: self.out, input: other.input, mat: self.mat.mul(&other.mat) })
    }

    /// Swap the tensor factors: `{out, input, mat} → {dual(input), dual(out), matᵀ}`.
    pub fn transpose(&self) -> Dyadic {
        Dyadic { out: self.input.dual(), input: self.out.dual(), mat: self.mat.transpose() }
    }

    /// Trace, defined for endomorphisms (`out == input`).
    pub fn trace(&self) -> Result<Scalar> {
        if self.out != self.input {
            return Err(Error::SpaceMismatch { expected: self.out, found: self.input });
        }
        Ok(self.mat.trace())
    }

    pub fn rank(&self) -> usize {
        self.mat.rank()
    }

    /// Exact inverse map `out → input`; `NoInverse { rank }` when singular.
    pub fn inverse(&self) -> Result<Dyadic> {
        Ok(Dyadic { out: self.input, input: self.out, mat: self.mat.inverse()? })
    }

    /// Symmetric part `(F + Fᵀ)/2` of a bilinear-form-shaped dyadic
    /// (requires `input == dual(out)`, so both tensor factors agree).
    pub fn symmetric_part(&self) -> Result<Dyadic> {
        self.check_bilinear()?;
        let m = self.mat.add(&self.mat.transpose()).scale(&ratio(1, 2));
        Ok(Dyadic { out: self.out, input: self.input, mat: m })
    }

    /// Antisymmetric part `(F − Fᵀ)/2`; same shape requirement.
    pub fn antisymmetric_part(&self) -> Result<Dyadic> {
        self.check_bilinear()?;
        let m = self.mat.sub(&self.mat.transpose()).scale(&ratio(1, 2));
        Ok(Dyadic { out: self.out, input: self.input, mat: m })
    }

    /// True when both tensor factors agree and the matrix is symmetric.
    pub fn is_symmetric(&self) -> bool {
        self.input == self.out.dual() && self.mat == self.mat.transpose()
    }

    fn check_bilinear(&self) -> Result<()> {
        if self.input != self.out.dual() {
            return Err(Error::SpaceMismatch { expected: self.out.dual(), found: self.input });
        }
        Ok(())
    }

    /// Double-wedge product `self ∧∧ other`: on dyads,
    /// `(a α)∧∧(b β) = (a∧b)(α∧β)`, extended bilinearly.  No factorial
    /// normalization is applied, so `I ∧∧ I = 2·I⁽²⁾`.
    pub fn double_wedge(&self, other: &Dyadic) -> Result<Dyadic> {
        if self.out.kind != other.out.kind {
            return Err(Error::SpaceMismatch { expected: self.out, found: other.out });
        }
        if self.input.kind != other.input.kind {
            return Err(Error::SpaceMismatch { expected: self.input, found: other.input });
        }
        let (k1, k2) = (self.out.grade, other.out.grade);
        let (l1, l2) = (self.input.grade, other.input.grade);
        if k1 + k2 > 4 {
            return Err(Error::GradeOverflow { left: k1, right: k2 });
        }
        if l1 + l2 > 4 {
            return Err(Error::GradeOverflow { left: l1, right: l2 });
        }
        let out = Space { kind: self.out.kind, grade: k1 + k2 };
        let input = Space { kind: self.input.kind, grade: l1 + l2 };
        let mut mat = Mat::zeros(out.dim(), input.dim());
        for (p, &pm) in MASKS[out.grade as usize].iter().enumerate() {
            for (i1, i2, s_out) in basis::splits(pm, k1) {
                let r1 = basis::index_in_grade(i1);
                let r2 = basis::index_in_grade(i2);
                for (q, &qm) in MASKS[input.grade as usize].iter().enumerate() {
                    for (j1, j2, s_in) in basis::splits(qm, l1) {
                        let a = &self.mat[(r1, basis::index_in_grade(j1))];
                        let b = &other.mat[(r2, basis::index_in_grade(j2))];
                        if a.is_zero() || b.is_zero() {
                            continue;
                        }
                        let term = a * b;
                        if s_out * s_in > 0 {
                            mat[(p, q)] += term;
                        } else {
                            mat[(p, q)] -= term;
                        }
                    }
                }
            }
        }
        Ok(Dyadic { out, input, mat })
    }

    /// The `p`-th compound (exterior power) of a grade-1→grade-1 map: the
    /// matrix of `p×p` minors, acting on grade-`p` blades.  Equals the
    /// `p`-fold double-wedge divided by `p!`.
    pub fn compound(&self, p: u8) -> Result<Dyadic> {
        if self.out.grade != 1 || self.input.grade != 1 {
            return Err(Error::Precondition("compound requires a grade-1 to grade-1 map"));
        }
        if !(1..=4).contains(&p) {
            return Err(Error::Precondition("compound power must lie in 1..=4"));
        }
        let out = Space { kind: self.out.kind, grade: p };
        let input = Space { kind: self.input.kind, grade: p };
        let mut mat = Mat::zeros(out.dim(), input.dim());
        for (r, &rm) in MASKS[p as usize].iter().enumerate() {
            let rows = mask_bits(rm);
            for (c, &cm) in MASKS[p as usize].iter().enumerate() {
                let cols = mask_bits(cm);
                let sub = Mat::from_fn(rows.len(), cols.len(), |i, j| {
                    self.mat[(rows[i], cols[j])].clone()
                });
                mat[(r, c)] = sub.det().expect("minor submatrix is square");
            }
        }
        Ok(Dyadic { out, input, mat })
    }

    /// Double contraction `self ⌊⌊ νν`: hook the one-form `ν` into both
    /// tensor factors (each a multivector space).  For the grades used here
    /// (2 and 3) this coincides with the left contraction `νν⌋⌋ self`, since
    /// the per-slot signs `(−1)^{g−1}` enter squared.
    pub fn double_contract(&self, nu: &MultiForm) -> Result<Dyadic> {
        if nu.grade() != 1 {
            return Err(Error::GradeMismatch { expected: 1, found: nu.grade() });
        }
        if self.out.kind != Kind::Vector || self.input.kind != Kind::Form {
            return Err(Error::SpaceMismatch {
                expected: Space::vectors(self.out.grade),
                found: self.out,
            });
        }
        if self.out.grade == 0 || self.input.grade == 0 {
            return Err(Error::GradeUnderflow { big: 0, small: 1 });
        }
        let left = hook_vector_map(nu, self.out.grade)?;
        let right = hook_vector_map(nu, self.input.grade)?;
        // Second-factor transform: the input slot is dual to a multivector
        // space of the same grade, so the hook acts there through its
        // transposed matrix.
        let mat = left.mat.mul(&self.mat).mul(&right.mat.transpose());
        let out = Space { kind: Kind::Vector, grade: self.out.grade - 1 };
        let input = Space { kind: Kind::Form, grade: self.input.grade - 1 };
        Ok(Dyadic { out, input, mat })
    }

    /// Total pairing `ε_N ε_N || self` of a map whose slots are both
    /// grade 4; with `pair(ε_N, e_N) = 1` this is the single matrix entry.
    pub fn double_pair(&self) -> Result<Scalar> {
        if self.out != Space::vectors(4) {
            return Err(Error::SpaceMismatch { expected: Space::vectors(4), found: self.out });
        }
        if self.input != Space::forms(4) {
            return Err(Error::SpaceMismatch { expected: Space::forms(4), found: self.input });
        }
        Ok(self.mat[(0, 0)].clone())
    }

    /// The natural dot product `self · other`: composition through the
    /// complement of `other`'s output space (for bivector-valued maps this
    /// is the middle factor `ε_N⌊I⁽²⁾`).
    pub fn dot(&self, other: &Dyadic) -> Result<Dyadic> {
        let middle = complement_map(other.out);
        self.compose(&middle.compose(other)?)
    }

    /// Apply to a multiform living in `input`.
    pub fn apply_form(&self, arg: &MultiForm) -> Result<Graded> {
        let found = Space::forms(arg.grade());
        if self.input != found {
            return Err(Error::SpaceMismatch { expected: self.input, found });
        }
        self.wrap_output(self.mat.mul_vec(arg.coords()))
    }

    /// Apply to a multivector living in `input`.
    pub fn apply_vector(&self, arg: &MultiVector) -> Result<Graded> {
        let found = Space::vectors(arg.grade());
        if self.input != found {
            return Err(Error::SpaceMismatch { expected: self.input, found });
        }
        self.wrap_output(self.mat.mul_vec(arg.coords()))
    }

    fn wrap_output(&self, coords: Vec<Scalar>) -> Result<Graded> {
        Ok(match self.out.kind {
            Kind::Vector => Graded::Vector(MultiVector::new(self.out.grade, coords)?),
            Kind::Form => Graded::Form(MultiForm::new(self.out.grade, coords)?),
        })
    }
}

fn mask_bits(mask: u8) -> Vec<usize> {
    (0..4).filter(|b| mask & (1 << b) != 0).collect()
}

/// The dyad `ω x` (form out-slot, vector second slot): maps a form `φ` of
/// `x`'s grade to `ω · pair(x, φ)`.
pub fn dyad_form_vector(omega: &MultiForm, x: &MultiVector) -> Dyadic {
    dyad_raw(Space::forms(omega.grade()), Space::forms(x.grade()), omega.coords(), x.coords())
}

/// The dyad `x y` (both slots multivectors): maps a form `φ` of `y`'s grade
/// to `x · pair(y, φ)`.
pub fn dyad_vector_vector(x: &MultiVector, y: &MultiVector) -> Dyadic {
    dyad_raw(Space::vectors(x.grade()), Space::forms(y.grade()), x.coords(), y.coords())
}

/// The dyad `x ω` (vector out-slot, form second slot): maps a vector `a` of
/// `ω`'s grade to `x · pair(ω, a)`.
pub fn dyad_vector_form(x: &MultiVector, omega: &MultiForm) -> Dyadic {
    dyad_raw(Space::vectors(x.grade()), Space::vectors(omega.grade()), x.coords(), omega.coords())
}

fn dyad_raw(out: Space, input: Space, a: &[Scalar], b: &[Scalar]) -> Dyadic {
    let mat = Mat::from_fn(a.len(), b.len(), |i, j| &a[i] * &b[j]);
    Dyadic { out, input, mat }
}

/// The complement map on `from`: hooking `e_N` into forms (`F_g → E_{4−g}`)
/// or `ε_N` into multivectors (`E_g → F_{4−g}`).  Composing the two
/// complement maps gives `(−1)^{g(4−g)}` times the identity.
pub fn complement_map(from: Space) -> Dyadic {
    let out = from.complement();
    let mut mat = Mat::zeros(out.dim(), from.dim());
    for (j, &m) in MASKS[from.grade as usize].iter().enumerate() {
        let (cm, sign) = basis::complement(m);
        mat[(basis::index_in_grade(cm), j)] = crate::scalar::int(sign as i64);
    }
    Dyadic { out, input: from, mat }
}

/// Hook both tensor factors with the appropriate unit top blade (`e_N` into
/// form slots): sends a map in `F_g F_h`-tensor shape to its double
/// complement.  Used to form the modified version of an inverse map.
pub fn complement_both(x: &Dyadic) -> Result<Dyadic> {
    let left = complement_map(x.out());
    let right = complement_map(x.input().dual()).transpose();
    left.compose(&x.compose(&right)?)
}

/// The wedge map `ω ↦ ν ∧ ω` on forms of grade `from_grade`.
pub fn wedge_form_map(nu: &MultiForm, from_grade: u8) -> Result<Dyadic> {
    if nu.grade() + from_grade > 4 {
        return Err(Error::GradeOverflow { left: nu.grade(), right: from_grade });
    }
    let out = Space::forms(nu.grade() + from_grade);
    let input = Space::forms(from_grade);
    let mut mat = Mat::zeros(out.dim(), input.dim());
    for j in 0..input.dim() {
        let img = nu.wedge(&MultiForm::basis(from_grade, j))?;
        for (i, c) in img.coords().iter().enumerate() {
            mat[(i, j)] = c.clone();
        }
    }
    Ok(Dyadic { out, input, mat })
}

/// The hook map `X ↦ X ⌊ α` on multivectors of grade `from_grade`.
pub fn hook_vector_map(alpha: &MultiForm, from_grade: u8) -> Result<Dyadic> {
    if alpha.grade() > from_grade {
        return Err(Error::GradeUnderflow { big: from_grade, small: alpha.grade() });
    }
    let out = Space::vectors(from_grade - alpha.grade());
    let input = Space::vectors(from_grade);
    let mut mat = Mat::zeros(out.dim(), input.dim());
    for j in 0..input.dim() {
        let img = MultiVector::basis(from_grade, j).hook(alpha)?;
        for (i, c) in img.coords().iter().enumerate() {
            mat[(i, j)] = c.clone();
        }
    }
    Ok(Dyadic { out, input, mat })
}

/// The antisymmetric grade-1 map `ν ↦ A ⌊ ν` attached to a bivector `A`
/// (every antisymmetric map of one-forms to vectors arises this way).
pub fn antisymmetric_map_from_bivector(a: &MultiVector) -> Result<Dyadic> {
    if a.grade() != 2 {
        return Err(Error::GradeMismatch { expected: 2, found: a.grade() });
    }
    let out = Space::vectors(1);
    let input = Space::forms(1);
    let mut mat = Mat::zeros(4, 4);
    for j in 0..4 {
        let img = a.hook(&MultiForm::basis(1, j))?;
        for (i, c) in img.coords().iter().enumerate() {
            mat[(i, j)] = c.clone();
        }
    }
    Ok(Dyadic { out, input, mat })
}

/// `M ↦ e_N⌊M`: the modified (bivector-valued) version of a constitutive
/// map on two-forms.
pub fn modified_from_constitutive(m: &Dyadic) -> Result<Dyadic> {
    if m.out() != Space::forms(2) || m.input() != Space::forms(2) {
        return Err(Error::SpaceMismatch { expected: Space::forms(2), found: m.out() });
    }
    complement_map(Space::forms(2)).compose(m)
}

/// Inverse of [`modified_from_constitutive`] (exact, because the grade-2
/// complement roundtrip sign is `+1`).
pub fn constitutive_from_modified(mm: &Dyadic) -> Result<Dyadic> {
    if mm.out() != Space::vectors(2) || mm.input() != Space::forms(2) {
        return Err(Error::SpaceMismatch { expected: Space::vectors(2), found: mm.out() });
    }
    complement_map(Space::vectors(2)).compose(mm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::en;
    use crate::scalar::int;

    fn bivector(c: [i64; 6]) -> MultiVector {
        MultiVector::new(2, c.iter().map(|&x| int(x)).collect()).unwrap()
    }

    fn form2(c: [i64; 6]) -> MultiForm {
        MultiForm::new(2, c.iter().map(|&x| int(x)).collect()).unwrap()
    }

    fn oneform(c: [i64; 4]) -> MultiForm {
        MultiForm::new(1, c.iter().map(|&x| int(x)).collect()).unwrap()
    }

    #[test]
    fn identity_applies_and_composes() {
        let i2 = Dyadic::identity(Space::forms(2));
        let phi = form2([1, -2, 3, 0, 5, 7]);
        let out = i2.apply_form(&phi).unwrap().expect_form();
        assert_eq!(out, phi);
        assert_eq!(i2.compose(&i2).unwrap(), i2);
        assert_eq!(i2.trace().unwrap(), int(6));
    }

    #[test]
    fn transpose_is_involutive_and_reverses_dyads() {
        let pi = form2([1, 2, 0, -1, 0, 3]);
        let c = bivector([0, 1, 1, 2, -1, 0]);
        let d = dyad_form_vector(&pi, &c);
        assert_eq!(d.transpose().transpose(), d);
        assert_eq!(d.transpose(), dyad_vector_form(&c, &pi));
    }

    #[test]
    fn complement_map_roundtrips_with_published_signs() {
        for g in 0..=4u8 {
            let fwd = complement_map(Space::forms(g));
            let back = complement_map(Space::vectors(4 - g));
            let round = back.compose(&fwd).unwrap();
            let lambda = basis::complement_roundtrip_sign(g) as i64;
            assert_eq!(round, Dyadic::identity(Space::forms(g)).scale(&int(lambda)));
        }
        // The grade-2 complement is symmetric and of full rank.
        let c = complement_map(Space::forms(2));
        assert!(c.is_symmetric());
        assert_eq!(c.rank(), 6);
        assert_eq!(c.transpose(), c);
    }

    #[test]
    fn double_wedge_of_unit_is_twice_bivector_unit() {
        let i = Dyadic::identity(Space::vectors(1));
        let ii = i.double_wedge(&i).unwrap();
        assert_eq!(ii, Dyadic::identity(Space::vectors(2)).scale(&int(2)));
        // Compounds divide by the factorial: I^(2) is the bivector unit.
        assert_eq!(i.compound(2).unwrap(), Dyadic::identity(Space::vectors(2)));
    }

    #[test]
    fn double_wedge_is_symmetric() {
        let f = Dyadic::from_int_rows(
            Space::vectors(1),
            Space::vectors(1),
            &[&[1, 2, 0, -1], &[0, 1, 3, 2], &[5, 0, 1, 0], &[2, -2, 0, 1]],
        )
        .unwrap();
        let g = Dyadic::from_int_rows(
            Space::vectors(1),
            Space::vectors(1),
            &[&[0, 1, 1, 0], &[2, 0, 0, 3], &[1, 1, 0, -1], &[0, 2, 1, 1]],
        )
        .unwrap();
        assert_eq!(f.double_wedge(&g).unwrap(), g.double_wedge(&f).unwrap());
    }

    #[test]
    fn top_compound_is_determinant() {
        let f = Dyadic::from_int_rows(
            Space::vectors(1),
            Space::forms(1),
            &[&[2, 1, 0, 0], &[1, 3, 1, 0], &[0, 1, 2, 1], &[0, 0, 1, 4]],
        )
        .unwrap();
        let top = f.compound(4).unwrap();
        assert_eq!(top.mat()[(0, 0)], f.mat().det().unwrap());
    }

    #[test]
    fn compound_multiplicativity_small_case() {
        let f = Dyadic::from_int_rows(
            Space::vectors(1),
            Space::vectors(1),
            &[&[1, 1, 0, 0], &[0, 1, 2, 0], &[0, 0, 1, 1], &[3, 0, 0, 1]],
        )
        .unwrap();
        let g = Dyadic::from_int_rows(
            Space::vectors(1),
            Space::vectors(1),
            &[&[2, 0, 1, 0], &[0, 1, 0, 1], &[1, 0, 1, 0], &[0, 2, 0, 1]],
        )
        .unwrap();
        for p in 1..=4u8 {
            let lhs = f.compose(&g).unwrap().compound(p).unwrap();
            let rhs = f.compound(p).unwrap().compose(&g.compound(p).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn rank_two_map_has_zero_third_compound() {
        let a = MultiVector::new(1, [1, 2, 0, -1].map(int).to_vec()).unwrap();
        let b = MultiVector::new(1, [0, 1, 1, 1].map(int).to_vec()).unwrap();
        let alpha = oneform([2, 0, 1, 1]);
        let beta = oneform([1, -1, 0, 3]);
        let f = dyad_vector_form(&a, &alpha).add(&dyad_vector_form(&b, &beta)).unwrap();
        assert!(f.compound(3).unwrap().is_zero());
        assert!(!f.compound(2).unwrap().is_zero());
    }

    #[test]
    fn antisymmetric_map_squares_to_dyad_minus_axion() {
        // (A⌊Iᵀ)^(2) = AA − ½ pair(ε_N, A∧A) · (e_N⌊ on two-forms),
        // the expansion that pins the complement sign conventions.
        let a = bivector([3, -1, 2, 5, 0, 7]);
        let q = antisymmetric_map_from_bivector(&a).unwrap();
        assert_eq!(q.mat().transpose(), q.mat().neg());
        let q2 = q.compound(2).unwrap();
        let aa = dyad_vector_vector(&a, &a);
        let wedge_sq = a.wedge(&a).unwrap();
        let s = crate::exterior::eps_n().pair(&wedge_sq).unwrap();
        let expected = aa.sub(&complement_map(Space::forms(2)).scale(&(s * ratio(1, 2)))).unwrap();
        assert_eq!(q2, expected);
    }

    #[test]
    fn dot_of_grade2_complement_is_itself() {
        let c = complement_map(Space::forms(2));
        assert_eq!(c.dot(&c).unwrap(), c);
    }

    #[test]
    fn double_pair_reads_the_top_entry() {
        let d = dyad_vector_vector(&en(), &en());
        assert_eq!(d.double_pair().unwrap(), int(1));
        assert!(Dyadic::identity(Space::forms(2)).double_pair().is_err());
    }

    #[test]
    fn double_contract_annihilates_nu_for_modified_maps() {
        let mm = Dyadic::from_int_rows(
            Space::vectors(2),
            Space::forms(2),
            &[
                &[1, 2, 0, -1, 4, 0],
                &[0, 3, 1, 2, 0, 1],
                &[5, 0, 2, 0, 1, 1],
                &[1, 1, 0, 3, 0, 2],
                &[0, 4, 1, 0, 2, 0],
                &[2, 0, 0, 1, 1, 3],
            ],
        )
        .unwrap();
        let nu = oneform([1, 2, -1, 3]);
        let d = mm.double_contract(&nu).unwrap();
        assert_eq!(d.out(), Space::vectors(1));
        assert_eq!(d.input(), Space::forms(1));
        // Both-sided annihilation of ν.
        let dv = d.apply_form(&nu).unwrap().expect_vector();
        assert!(dv.is_zero());
        let vt = d.transpose().apply_form(&nu).unwrap().expect_vector();
        assert!(vt.is_zero());
    }

    #[test]
    fn modified_conversion_roundtrips() {
        let m = Dyadic::from_int_rows(
            Space::forms(2),
            Space::forms(2),
            &[
                &[1, 0, 2, 0, 0, 1],
                &[0, 1, 0, 3, 0, 0],
                &[2, 0, 1, 0, 1, 0],
                &[0, 3, 0, 1, 0, 2],
                &[0, 0, 1, 0, 1, 0],
                &[1, 0, 0, 2, 0, 1],
            ],
        )
        .unwrap();
        let mm = modified_from_constitutive(&m).unwrap();
        assert_eq!(constitutive_from_modified(&mm).unwrap(), m);
        // Complementing both slots of the inverse agrees with the modified
        // form of the inverse map (the construction used for N_m).
        let nm = complement_both(&mm.inverse().unwrap()).unwrap();
        let n = m.inverse().unwrap();
        assert_eq!(nm, modified_from_constitutive(&n).unwrap());
    }

    #[test]
    fn shape_and_space_errors_are_reported() {
        let bad = Dyadic::new(Space::forms(2), Space::forms(2), Mat::zeros(4, 6));
        assert!(matches!(bad, Err(Error::Shape { .. })));
        let i1 = Dyadic::identity(Space::vectors(1));
        let i2 = Dyadic::identity(Space::forms(2));
        assert!(matches!(i2.compose(&i1), Err(Error::SpaceMismatch { .. })));
        let phi = form2([1, 0, 0, 0, 0, 0]);
        assert!(i1.apply_form(&phi).is_err());
    }
}
