//! Canonical basis blades as bit masks.
//!
//! Bit `i` set means the covector `e^{i+1}` is a factor. A mask always
//! denotes the wedge of its factors in strictly ascending index order.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_DIM: usize = 16;

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Blade(pub u16);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    /// Blade from 1-based indices. The indices must be distinct; they are
    /// sorted, so the sign of the reordering is returned alongside.
    pub fn from_indices(indices: &[usize]) -> Result<(Blade, i8)> {
        let mut bits = 0u16;
        for &i in indices {
            if i == 0 || i > MAX_DIM {
                return Err(Error::IndexOutOfRange { index: i, dim: MAX_DIM });
            }
            let bit = 1u16 << (i - 1);
            if bits & bit != 0 {
                return Err(Error::NotAPermutation(i));
            }
            bits |= bit;
        }
        Ok((Blade(bits), permutation_sign(indices)?))
    }

    pub fn basis(i: usize) -> Blade {
        debug_assert!((1..=MAX_DIM).contains(&i));
        Blade(1 << (i - 1))
    }

    /// `e^1 ∧ ⋯ ∧ e^n`.
    pub fn full(dim: usize) -> Blade {
        if dim >= 16 {
            Blade(u16::MAX)
        } else {
            Blade(((1u32 << dim) - 1) as u16)
        }
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=MAX_DIM).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    /// 1-based indices in ascending order.
    pub fn indices(self) -> Vec<usize> {
        (0..MAX_DIM).filter(|b| self.0 & (1 << b) != 0).map(|b| b + 1).collect()
    }

    pub fn fits(self, dim: usize) -> bool {
        self.0 & !Blade::full(dim).0 == 0
    }

    pub fn union(self, other: Blade) -> Blade {
        Blade(self.0 | other.0)
    }

    pub fn intersection(self, other: Blade) -> Blade {
        Blade(self.0 & other.0)
    }

    pub fn without(self, other: Blade) -> Blade {
        Blade(self.0 & !other.0)
    }

    pub fn complement(self, dim: usize) -> Blade {
        Blade(Blade::full(dim).0 & !self.0)
    }

    /// Every canonical blade of the given dimension, in (grade, mask) order.
    pub fn all(dim: usize) -> Vec<Blade> {
        let mut v: Vec<Blade> = (0..(1u32 << dim)).map(|b| Blade(b as u16)).collect();
        v.sort();
        v
    }

    pub fn of_grade(dim: usize, k: usize) -> Vec<Blade> {
        Blade::all(dim).into_iter().filter(|b| b.grade() == k).collect()
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grade().cmp(&other.grade()).then_with(|| lex_order(*self, *other))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

// Within a grade, blades are ordered lexicographically by index list, so
// e1^e2 < e1^e3 < e2^e3. The mask holding the lowest differing bit wins.
fn lex_order(a: Blade, b: Blade) -> Ordering {
    let diff = a.0 ^ b.0;
    if diff == 0 {
        Ordering::Equal
    } else if a.0 & (diff & diff.wrapping_neg()) != 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.indices().iter().map(|i| format!("e{i}")).collect();
        f.write_str(&parts.join("^"))
    }
}

/// Parity of a sequence of distinct indices relative to its sorted order.
pub fn permutation_sign(perm: &[usize]) -> Result<i8> {
    let mut seen = BTreeSet::new();
    for &p in perm {
        if !seen.insert(p) {
            return Err(Error::NotAPermutation(p));
        }
    }
    let mut visited = vec![false; perm.len()];
    let mut order: Vec<usize> = (0..perm.len()).collect();
    order.sort_by_key(|&i| perm[i]);
    // order[i] is where the i-th smallest element sits; count even cycles.
    let mut sign = 1i8;
    for start in 0..perm.len() {
        if visited[start] {
            continue;
        }
        let mut len = 0;
        let mut j = start;
        while !visited[j] {
            visited[j] = true;
            j = order[j];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    Ok(sign)
}

/// Sign of `A ∧ B` relative to the canonical blade `A ∪ B`; zero when the
/// blades share a factor.
pub fn wedge_sign(a: Blade, b: Blade) -> i8 {
    if a.0 & b.0 != 0 {
        return 0;
    }
    // Each factor of b must move past every factor of a with a larger index.
    let mut swaps = 0u32;
    let mut bb = b.0;
    while bb != 0 {
        let low = bb.trailing_zeros();
        let above = if low >= 15 { 0 } else { a.0 >> (low + 1) };
        swaps += above.count_ones();
        bb &= bb - 1;
    }
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Dimension-checked [`wedge_sign`].
pub fn wedge_sign_in(dim: usize, a: Blade, b: Blade) -> Result<i8> {
    for x in [a, b] {
        if !x.fits(dim) {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: 16 - x.0.leading_zeros() as usize,
            });
        }
    }
    Ok(wedge_sign(a, b))
}
