//! The octonion multiplication table and the structure constants read off it.

/// A signed basis element `sign * e_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignedUnit {
    pub sign: i8,
    pub index: u8,
}

const fn p(index: u8) -> SignedUnit {
    SignedUnit { sign: 1, index }
}

const fn m(index: u8) -> SignedUnit {
    SignedUnit { sign: -1, index }
}

/// `MULTIPLICATION_TABLE[i][j]` is the product `e_i e_j`.
///
/// Row `i` is the left factor, column `j` the right factor.
pub const MULTIPLICATION_TABLE: [[SignedUnit; 8]; 8] = [
    [p(0), p(1), p(2), p(3), p(4), p(5), p(6), p(7)],
    [p(1), m(0), p(3), m(2), p(5), m(4), m(7), p(6)],
    [p(2), m(3), m(0), p(1), p(6), p(7), m(4), m(5)],
    [p(3), p(2), m(1), m(0), p(7), m(6), p(5), m(4)],
    [p(4), m(5), m(6), m(7), m(0), p(1), p(2), p(3)],
    [p(5), p(4), m(7), p(6), m(1), m(0), m(3), p(2)],
    [p(6), p(7), p(4), m(5), m(2), p(3), m(0), m(1)],
    [p(7), m(6), p(5), p(4), m(3), m(2), p(1), m(0)],
];

/// Oriented triples `(i, j, k)` with `e_i e_j = e_k` that generate every
/// nonzero structure constant under index permutations.
pub const POSITIVE_TRIPLES: [(usize, usize, usize); 7] = [
    (1, 2, 3),
    (1, 4, 5),
    (1, 7, 6),
    (2, 4, 6),
    (2, 5, 7),
    (3, 4, 7),
    (3, 6, 5),
];

/// Totally antisymmetric structure constants `f_ijk` of the imaginary units,
/// so that `e_i e_j = -δ_ij + f_ijk e_k` for `i, j, k ∈ 1..=7`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    f: [[[i8; 7]; 7]; 7],
}

impl StructureConstants {
    /// Reads `f_ijk` off [`MULTIPLICATION_TABLE`].
    pub fn from_table() -> Self {
        let mut f = [[[0i8; 7]; 7]; 7];
        for i in 1..8 {
            for j in 1..8 {
                let u = MULTIPLICATION_TABLE[i][j];
                if u.index != 0 {
                    f[i - 1][j - 1][u.index as usize - 1] = u.sign;
                }
            }
        }
        Self { f }
    }

    /// `f_ijk` with 1-based indices in `1..=7`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> i8 {
        assert!((1..8).contains(&i) && (1..8).contains(&j) && (1..8).contains(&k));
        self.f[i - 1][j - 1][k - 1]
    }

    /// Number of nonzero entries; 42 for the octonions (7 triples × 6 orderings).
    pub fn nonzero_count(&self) -> usize {
        self.f.iter().flatten().flatten().filter(|v| **v != 0).count()
    }
}

impl Default for StructureConstants {
    fn default() -> Self {
        Self::from_table()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn table_is_antisymmetric_off_diagonal() {
        for i in 1..8 {
            assert_eq!(MULTIPLICATION_TABLE[i][i], m(0));
            assert_eq!(MULTIPLICATION_TABLE[0][i], p(i as u8));
            assert_eq!(MULTIPLICATION_TABLE[i][0], p(i as u8));
            for j in 1..8 {
                if i != j {
                    let a = MULTIPLICATION_TABLE[i][j];
                    let b = MULTIPLICATION_TABLE[j][i];
                    assert_eq!(a.index, b.index);
                    assert_eq!(a.sign, -b.sign);
                }
            }
        }
    }

    #[test]
    fn structure_constants_totally_antisymmetric() {
        let f = StructureConstants::from_table();
        for i in 1..8 {
            for j in 1..8 {
                for k in 1..8 {
                    let v = f.get(i, j, k);
                    assert_eq!(v, -f.get(j, i, k));
                    assert_eq!(v, -f.get(i, k, j));
                    assert_eq!(v, -f.get(k, j, i));
                }
            }
        }
        assert_eq!(f.nonzero_count(), 42);
    }

    #[test]
    fn nonzero_entries_are_the_triple_orbit() {
        let f = StructureConstants::from_table();
        let mut count = 0;
        for &(i, j, k) in &POSITIVE_TRIPLES {
            for (a, b, c, s) in [
                (i, j, k, 1),
                (j, k, i, 1),
                (k, i, j, 1),
                (j, i, k, -1),
                (i, k, j, -1),
                (k, j, i, -1),
            ] {
                assert_eq!(f.get(a, b, c), s);
                count += 1;
            }
        }
        assert_eq!(count, f.nonzero_count());
    }
}
