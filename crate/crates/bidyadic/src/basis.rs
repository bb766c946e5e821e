//! Basis bookkeeping for the sixteen blades of a four-dimensional space.
//!
//! Basis blades are represented as 4-bit masks (bit `i` set means the basis
//! index `i+1` participates).  Within each grade the basis is ordered
//! lexicographically by the sorted index tuple, which for bivectors gives the
//! fixed ordering
//!
//! ```text
//! 12, 13, 14, 23, 24, 34
//! ```
//!
//! used by every 6×6 matrix in this crate.  All sign tables (wedge
//! permutation signs, complement signs) are derived from the masks on the
//! fly; they are cheap bit counts.

use alloc::string::String;
use alloc::vec::Vec;

/// Dimension of each grade: `C(4, k)`.
pub const GRADE_DIMS: [usize; 5] = [1, 4, 6, 4, 1];

/// Full mask: all four basis indices.
pub const FULL_MASK: u8 = 0b1111;

/// Basis masks of each grade, in lexicographic order of the sorted index
/// tuple.  `MASKS[2]` is the bivector ordering 12, 13, 14, 23, 24, 34.
pub const MASKS: [&[u8]; 5] = [
    &[0b0000],
    &[0b0001, 0b0010, 0b0100, 0b1000],
    &[0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100],
    &[0b0111, 0b1011, 0b1101, 0b1110],
    &[0b1111],
];

/// Number of indices in a mask (the grade of the blade).
pub fn grade_of(mask: u8) -> u8 {
    mask.count_ones() as u8
}

/// Position of `mask` within its grade's ordered basis.
pub fn index_in_grade(mask: u8) -> usize {
    let k = grade_of(mask) as usize;
    MASKS[k]
        .iter()
        .position(|&m| m == mask)
        .expect("valid 4-bit basis mask")
}

/// Permutation sign of concatenating the sorted blade `a` before the sorted
/// blade `b` and resorting, i.e. the sign with which `e_a ∧ e_b` equals the
/// sorted blade `e_(a∪b)`.  `None` if the blades share an index.
pub fn merge_sign(a: u8, b: u8) -> Option<i8> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0u32;
    for i in 0..4 {
        if a & (1 << i) != 0 {
            // indices of b strictly below i must jump over this index of a
            swaps += (b & ((1u8 << i) - 1)).count_ones();
        }
    }
    Some(if swaps % 2 == 0 { 1 } else { -1 })
}

/// Complement blade and the sign with which the blade wedges onto it to give
/// the full volume blade: `e_m ∧ e_comp = sign · e_1234`.
pub fn complement(mask: u8) -> (u8, i8) {
    let comp = FULL_MASK ^ mask;
    let sign = merge_sign(mask, comp).expect("complement is disjoint");
    (comp, sign)
}

/// Sign of the double complement on grade `k`: applying the complement map
/// twice multiplies a grade-`k` value by this sign.
pub fn complement_roundtrip_sign(k: u8) -> i8 {
    // (-1)^(k(4-k)): the block-swap parity of I against its complement.
    if (k as usize * (4 - k as usize)) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Render a mask as its index string, e.g. `0b0110` → `"23"`; the scalar
/// blade renders as `"0"`.
pub fn mask_label(mask: u8) -> String {
    if mask == 0 {
        return String::from("0");
    }
    let mut s = String::new();
    for i in 0..4 {
        if mask & (1 << i) != 0 {
            s.push(char::from_digit(i + 1, 10).unwrap());
        }
    }
    s
}

/// All ways to split `mask` into an ordered pair of disjoint sub-blades of
/// grades `(k, grade - k)`, with the merge sign of each split.
pub fn splits(mask: u8, k: u8) -> Vec<(u8, u8, i8)> {
    let mut out = Vec::new();
    for &a in MASKS[k as usize] {
        if a & mask == a {
            let b = mask ^ a;
            if let Some(s) = merge_sign(a, b) {
                out.push((a, b, s));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bivector_order_is_lexicographic() {
        let labels: Vec<String> = MASKS[2].iter().map(|&m| mask_label(m)).collect();
        assert_eq!(labels, ["12", "13", "14", "23", "24", "34"]);
    }

    #[test]
    fn merge_sign_examples() {
        // e1 ∧ e2 = +e12, e2 ∧ e1 = -e12
        assert_eq!(merge_sign(0b0001, 0b0010), Some(1));
        assert_eq!(merge_sign(0b0010, 0b0001), Some(-1));
        // e13 ∧ e24: 1,3,2,4 has one inversion
        assert_eq!(merge_sign(0b0101, 0b1010), Some(-1));
        // overlapping blades do not merge
        assert_eq!(merge_sign(0b0011, 0b0010), None);
    }

    #[test]
    fn complement_signs() {
        let expected: [(u8, i8); 6] = [
            (0b0011, 1),  // 12 ∧ 34 = +e1234
            (0b0101, -1), // 13 ∧ 24
            (0b1001, 1),  // 14 ∧ 23
            (0b0110, 1),  // 23 ∧ 14
            (0b1010, -1), // 24 ∧ 13
            (0b1100, 1),  // 34 ∧ 12
        ];
        for (mask, sign) in expected {
            assert_eq!(complement(mask).1, sign, "mask {mask:04b}");
        }
    }

    #[test]
    fn roundtrip_signs_alternate() {
        let signs: Vec<i8> = (0..=4).map(complement_roundtrip_sign).collect();
        assert_eq!(signs, [1, -1, 1, -1, 1]);
    }

    #[test]
    fn splits_cover_all_subblades() {
        let s = splits(0b0111, 1);
        assert_eq!(s.len(), 3);
        // e2 ∧ e13 = -e123
        assert!(s.contains(&(0b0010, 0b0101, -1)));
    }
}
