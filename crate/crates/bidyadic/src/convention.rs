//! The fixed basis conventions, collected in one auditable place.
//!
//! Every matrix in this crate is written against the same frozen choices:
//! lexicographic blade ordering, Kronecker pairing of dual bases, the
//! orientation `e_N = e1∧e2∧e3∧e4`, and contraction signs solved once from
//! the normative identity on field two-forms
//!
//! ```text
//! a⌋(ν∧Φ) = ν∧(a⌋Φ) + (a|ν)Φ
//! ```
//!
//! (on a grade-`k` form the last term carries `(−1)^k`) rather than assumed
//! from any textbook.  [`basis_convention`] returns the
//! machine-readable summary that files carry, and [`dump`] renders the full
//! structure-constant tables *from the live operations* — the text is an
//! audit of what the code actually computes, not a transcript that could
//! drift out of date.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::basis::{self, MASKS};
use crate::dispersion::quartic_multisets;
use crate::exterior::{basis_oneform, basis_vector, en, eps_n, MultiForm, MultiVector};
use crate::scalar::{Scalar, Signed, Zero};

/// The machine-readable convention block: the data serialized into every
/// file the command-line tools read or write, and checked on parse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisConvention {
    /// Bivector index pairs in matrix order.
    pub bivector_order: [&'static str; 6],
    /// `pair(ε_N, e_N)` for the chosen volume blades.
    pub orientation_sign: i8,
    /// Pairing normalization descriptor.
    pub pairing: &'static str,
    /// The global contraction sign `s` in `e1⌋ε12 = s·ε2`.
    pub contraction_sign: i8,
}

/// Bivector basis order used by every 6×6 matrix.
pub const BIVECTOR_ORDER: [&'static str; 6] = ["12", "13", "14", "23", "24", "34"];

/// Pairing descriptor: `e_I | ε_J = δ_IJ` on sorted basis blades at every
/// grade (the determinant convention).
pub const PAIRING: &str = "kronecker-sorted-blades";

/// The process-wide convention values, computed from the live operations.
pub fn basis_convention() -> BasisConvention {
    BasisConvention {
        bivector_order: BIVECTOR_ORDER,
        orientation_sign: orientation_sign(),
        pairing: PAIRING,
        contraction_sign: contraction_sign(),
    }
}

/// `pair(ε_N, e_N)`: `+1` with both volume blades built from the ascending
/// basis.
pub fn orientation_sign() -> i8 {
    scalar_sign(&eps_n().pair(&en()).expect("grade-4 pairing"))
}

/// The global sign `s` in `e1⌋ε12 = s·ε2`, fixed by the normative identity.
pub fn contraction_sign() -> i8 {
    let contracted = basis_vector(0)
        .contract(&MultiForm::basis(2, 0))
        .expect("grade-1 into grade-2");
    scalar_sign(contracted.coord(1))
}

fn scalar_sign(x: &Scalar) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Format a value known to be `±1` times a single basis blade, e.g. `-ε2`
/// or `+e234`.
fn signed_blade(coords: &[Scalar], grade: u8, prefix: &str) -> String {
    let nonzero: Vec<usize> = (0..coords.len()).filter(|&i| !coords[i].is_zero()).collect();
    match nonzero.as_slice() {
        [] => String::from("0"),
        [i] => {
            let sign = if coords[*i].is_negative() { '-' } else { '+' };
            let label = basis::mask_label(MASKS[grade as usize][*i]);
            let mut s = String::new();
            let _ = write!(s, "{sign}{prefix}{label}");
            s
        }
        _ => panic!("structure-constant table entry is not a signed blade"),
    }
}

/// Render the complete convention tables as stable, deterministic text.
pub fn dump() -> String {
    let mut out = String::new();
    let w = &mut out;

    let _ = writeln!(w, "basis conventions");
    let _ = writeln!(w, "=================");
    let _ = writeln!(w);
    let _ = writeln!(w, "blade order per grade (lexicographic sorted-index tuples):");
    for grade in 0..=4usize {
        let labels: Vec<String> =
            MASKS[grade].iter().map(|&m| basis::mask_label(m)).collect();
        let _ = writeln!(w, "  grade {}: {}", grade, labels.join(" "));
    }
    let _ = writeln!(w, "dual forms use the same ordering (ε in place of e).");
    let _ = writeln!(w);
    let _ = writeln!(w, "pairing: e_I | ε_J = δ_IJ on sorted blades at every grade ({PAIRING}).");
    let _ = writeln!(
        w,
        "orientation: e_N = e1∧e2∧e3∧e4, ε_N = ε1∧ε2∧ε3∧ε4, pair(ε_N, e_N) = {:+}.",
        orientation_sign()
    );
    let _ = writeln!(w);

    let _ = writeln!(w, "wedge signs (ε_i ∧ ε_J; extends bilinearly and associatively):");
    for grade in 1..=3u8 {
        for j in 0..MASKS[grade as usize].len() {
            let form = MultiForm::basis(grade, j);
            for i in 0..4 {
                if MASKS[grade as usize][j] & (1 << i) != 0 {
                    continue;
                }
                let wedged = basis_oneform(i).wedge(&form).expect("disjoint blades");
                let _ = writeln!(
                    w,
                    "  ε{} ∧ ε{} = {}",
                    i + 1,
                    basis::mask_label(MASKS[grade as usize][j]),
                    signed_blade(wedged.coords(), grade + 1, "ε")
                );
            }
        }
    }
    let _ = writeln!(w);

    let _ = writeln!(w, "contraction ⌋ (grade-one into the LAST slot; pair(a⌋ω, X) = pair(ω, X∧a)):");
    let _ = writeln!(
        w,
        "  normative identity on two-forms Φ: a⌋(ν∧Φ) = ν∧(a⌋Φ) + (a|ν)Φ; it fixes the global sign s = {:+} (e1⌋ε12 = s·ε2).",
        contraction_sign()
    );
    let _ = writeln!(
        w,
        "  on a grade-k form the scalar term carries (−1)^k: a⌋(ν∧Φ) = ν∧(a⌋Φ) + (−1)^k(a|ν)Φ."
    );
    for grade in 1..=4u8 {
        for j in 0..MASKS[grade as usize].len() {
            let form = MultiForm::basis(grade, j);
            for i in 0..4 {
                if MASKS[grade as usize][j] & (1 << i) == 0 {
                    continue;
                }
                let contracted = basis_vector(i).contract(&form).expect("index in blade");
                let _ = writeln!(
                    w,
                    "  e{} ⌋ ε{} = {}",
                    i + 1,
                    basis::mask_label(MASKS[grade as usize][j]),
                    signed_blade(contracted.coords(), grade - 1, "ε")
                );
            }
        }
    }
    let _ = writeln!(w);

    let _ = writeln!(w, "complement signs (hook ⌊ from the FIRST slots; pair(β, X⌊α) = pair(α∧β, X)):");
    for grade in 0..=4u8 {
        for j in 0..MASKS[grade as usize].len() {
            let label = basis::mask_label(MASKS[grade as usize][j]);
            let form_comp = MultiForm::basis(grade, j).complement();
            let _ = writeln!(
                w,
                "  e_N ⌊ ε{} = {}",
                label,
                signed_blade(form_comp.coords(), 4 - grade, "e")
            );
            let vec_comp = MultiVector::basis(grade, j).complement();
            let _ = writeln!(
                w,
                "  ε_N ⌊ e{} = {}",
                label,
                signed_blade(vec_comp.coords(), 4 - grade, "ε")
            );
        }
    }
    let roundtrip: Vec<String> = (0..=4u8)
        .map(|k| {
            let mut s = String::new();
            let _ = write!(s, "{:+}", basis::complement_roundtrip_sign(k));
            s
        })
        .collect();
    let _ = writeln!(
        w,
        "complement roundtrip per grade 0..4 (both complements in sequence): {}",
        roundtrip.join(" ")
    );
    let _ = writeln!(w);

    let _ = writeln!(w, "quartic polarization (35 evaluation points, lexicographic multisets):");
    let _ = writeln!(w, "  idx  monomial       point");
    for (idx, ms) in quartic_multisets().iter().enumerate() {
        let mut mult = [0u8; 4];
        for &i in ms {
            mult[i as usize] += 1;
        }
        let mut monomial = String::new();
        for (i, &m) in mult.iter().enumerate() {
            if m > 0 {
                let _ = write!(monomial, "ν{}^{} ", i + 1, m);
            }
        }
        let _ = writeln!(
            w,
            "  {:>3}  {:<13} ({}, {}, {}, {})",
            idx,
            monomial.trim_end(),
            mult[0],
            mult[1],
            mult[2],
            mult[3]
        );
    }
    out
}
