use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite monoid given by its multiplication table; `inverses` is present exactly
/// when every element is invertible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteMonoid {
    table: Vec<Vec<usize>>,
    unit: usize,
    inverses: Option<Vec<usize>>,
}

impl FiniteMonoid {
    pub fn new(table: Vec<Vec<usize>>, unit: usize) -> Result<FiniteMonoid> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) || unit >= n {
            return Err(Error::NotAGroup("table is not square or has entries out of range".into()));
        }
        for a in 0..n {
            if table[unit][a] != a || table[a][unit] != a {
                return Err(Error::NotAGroup(format!("unit law fails at element {a}")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        let inverses: Option<Vec<usize>> =
            (0..n).map(|a| (0..n).find(|&b| table[a][b] == unit && table[b][a] == unit)).collect();
        Ok(FiniteMonoid { table, unit, inverses })
    }

    /// Like [`FiniteMonoid::new`] but refuses tables without inverses.
    pub fn group(table: Vec<Vec<usize>>, unit: usize) -> Result<FiniteMonoid> {
        let m = FiniteMonoid::new(table, unit)?;
        if let Some(a) = (0..m.size()).find(|&a| m.inverse(a).is_none()) {
            return Err(Error::NotAGroup(format!("element {a} has no inverse")));
        }
        Ok(m)
    }

    /// Cyclic group `C_n` with elements `0..n` and addition mod `n`.
    pub fn cyclic(n: usize) -> FiniteMonoid {
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteMonoid::group(table, 0).expect("cyclic group")
    }

    /// The symmetric group on three letters; elements are permutations in
    /// lexicographic order, composed as functions (`(ab)(i) = a(b(i))`).
    pub fn symmetric3() -> FiniteMonoid {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms.iter().map(|a| perms.iter().map(|b| idx([a[b[0]], a[b[1]], a[b[2]]])).collect()).collect();
        FiniteMonoid::group(table, 0).expect("S3")
    }

    /// Klein four-group `C_2 × C_2` with elements encoded as two-bit masks.
    pub fn klein4() -> FiniteMonoid {
        let table = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        FiniteMonoid::group(table, 0).expect("Klein four-group")
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        self.inverses.as_ref().map(|v| v[a])
    }

    pub fn is_group(&self) -> bool {
        self.inverses.is_some()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.size()).all(|a| (0..self.size()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_groups() {
        assert_eq!(FiniteMonoid::cyclic(3).inverse(1), Some(2));
        let s3 = FiniteMonoid::symmetric3();
        assert!(s3.is_group());
        assert!(!s3.is_commutative());
        assert!(FiniteMonoid::klein4().is_commutative());
    }

    #[test]
    fn rejects_non_associative_table() {
        let t = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 0]];
        assert!(FiniteMonoid::new(t, 0).is_err());
    }

    #[test]
    fn monoid_without_inverses() {
        // {1, 0} under multiplication
        let m = FiniteMonoid::new(vec![vec![0, 1], vec![1, 1]], 0).unwrap();
        assert!(!m.is_group());
        assert!(FiniteMonoid::group(vec![vec![0, 1], vec![1, 1]], 0).is_err());
    }
}
