use std::fmt;

use super::DiscreteGroup;
use crate::error::{Error, Result};

/// Largest lamp group accepted; tables are stored densely.
pub const MAX_LAMP_ORDER: usize = 1024;

/// Element id of a lamp group. Id 0 is always the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LampElement(pub u32);

impl LampElement {
    pub const IDENTITY: LampElement = LampElement(0);

    pub fn id(self) -> u32 {
        self.0
    }

    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for LampElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Finite nontrivial group given by its multiplication table over ids
/// `0..order`, with `0` the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LampGroup {
    order: usize,
    table: Vec<LampElement>,
    inverses: Vec<LampElement>,
}

fn check_order(order: usize) -> Result<()> {
    if order < 2 {
        return Err(Error::TrivialLampGroup(order));
    }
    if order > MAX_LAMP_ORDER {
        return Err(Error::LampOrderTooLarge { order, max: MAX_LAMP_ORDER });
    }
    Ok(())
}

impl LampGroup {
    /// The cyclic group `Z/k`, with id `i` standing for the residue `i`.
    pub fn cyclic(order: usize) -> Result<Self> {
        check_order(order)?;
        let table = (0..order * order)
            .map(|i| LampElement(((i / order + i % order) % order) as u32))
            .collect();
        let inverses = (0..order).map(|i| LampElement(((order - i) % order) as u32)).collect();
        Ok(LampGroup { order, table, inverses })
    }

    /// The symmetric group on `degree` points. Permutations are numbered in
    /// lexicographic order of their images (so id 0 is the identity) and
    /// composed right to left: `(a * b)(i) = a(b(i))`.
    pub fn symmetric(degree: usize) -> Result<Self> {
        let order = (1..=degree).try_fold(1usize, |acc, d| acc.checked_mul(d)).unwrap_or(usize::MAX);
        check_order(order)?;
        let mut perms: Vec<Vec<usize>> = vec![(0..degree).collect()];
        let mut cur: Vec<usize> = (0..degree).collect();
        while next_permutation(&mut cur) {
            perms.push(cur.clone());
        }
        let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap() as u32;
        let rows = perms
            .iter()
            .map(|a| {
                perms
                    .iter()
                    .map(|b| index(&b.iter().map(|&i| a[i]).collect::<Vec<_>>()))
                    .collect()
            })
            .collect();
        Self::from_table(rows)
    }

    /// Build from an explicit table, `rows[a][b] = a * b`. The group law is
    /// verified in full.
    pub fn from_table(rows: Vec<Vec<u32>>) -> Result<Self> {
        let order = rows.len();
        check_order(order)?;
        let mut table = Vec::with_capacity(order * order);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(Error::InvalidTable(format!(
                    "row {a} has {} entries, expected {order}",
                    row.len()
                )));
            }
            for &v in row {
                if v as usize >= order {
                    return Err(Error::InvalidTable(format!("entry {v} in row {a} is not an element id")));
                }
                table.push(LampElement(v));
            }
        }
        let mut inverses = vec![LampElement::IDENTITY; order];
        for (a, inv) in inverses.iter_mut().enumerate() {
            match rows[a].iter().position(|&v| v == 0) {
                Some(b) => *inv = LampElement(b as u32),
                None => return Err(Error::InvalidTable(format!("element {a} has no inverse"))),
            }
        }
        let group = LampGroup { order, table, inverses };
        group.verify()?;
        Ok(group)
    }

    /// Parse the table file format: a line `order k` followed by `k` lines
    /// of `k` space-separated ids.
    pub fn parse_table(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::InvalidTable("empty table file".into()))?;
        let order: usize = header
            .strip_prefix("order")
            .and_then(|rest| rest.trim().parse().ok())
            .ok_or_else(|| Error::InvalidTable(format!("bad header {header:?}, expected \"order k\"")))?;
        check_order(order)?;
        let mut rows = Vec::with_capacity(order);
        for line in lines {
            let row = line
                .split_whitespace()
                .map(|t| t.parse::<u32>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| Error::InvalidTable(format!("row {}: {e}", rows.len())))?;
            rows.push(row);
        }
        if rows.len() != order {
            return Err(Error::InvalidTable(format!("expected {order} rows, found {}", rows.len())));
        }
        Self::from_table(rows)
    }

    /// Check identity, two-sided inverses and associativity.
    pub fn verify(&self) -> Result<()> {
        let k = self.order;
        for a in 0..k {
            let e = LampElement(a as u32);
            if self.mul(LampElement::IDENTITY, e) != e || self.mul(e, LampElement::IDENTITY) != e {
                return Err(Error::InvalidTable(format!("0 is not a two-sided identity for {a}")));
            }
            let inv = self.inverse(e);
            if !self.mul(e, inv).is_identity() || !self.mul(inv, e).is_identity() {
                return Err(Error::InvalidTable(format!("element {a} lacks a two-sided inverse")));
            }
        }
        for a in 0..k as u32 {
            for b in 0..k as u32 {
                let ab = self.mul(LampElement(a), LampElement(b));
                for c in 0..k as u32 {
                    let lhs = self.mul(ab, LampElement(c));
                    let rhs = self.mul(LampElement(a), self.mul(LampElement(b), LampElement(c)));
                    if lhs != rhs {
                        return Err(Error::InvalidTable(format!("not associative at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> impl Iterator<Item = LampElement> {
        (0..self.order as u32).map(LampElement)
    }

    pub fn mul(&self, a: LampElement, b: LampElement) -> LampElement {
        self.table[a.0 as usize * self.order + b.0 as usize]
    }

    pub fn inverse(&self, a: LampElement) -> LampElement {
        self.inverses[a.0 as usize]
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn check_element(&self, a: LampElement) -> Result<()> {
        if (a.0 as usize) < self.order {
            Ok(())
        } else {
            Err(Error::LampOutOfRange { value: a.0, order: self.order })
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = p.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = p.iter().rposition(|&x| x > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

impl DiscreteGroup for LampGroup {
    type Element = LampElement;

    fn identity(&self) -> LampElement {
        LampElement::IDENTITY
    }

    fn mul(&self, a: &LampElement, b: &LampElement) -> LampElement {
        LampGroup::mul(self, *a, *b)
    }

    fn inverse(&self, a: &LampElement) -> LampElement {
        LampGroup::inverse(self, *a)
    }

    fn contains(&self, a: &LampElement) -> bool {
        (a.0 as usize) < self.order
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_tables_are_groups() {
        for k in 2..=12 {
            let g = LampGroup::cyclic(k).unwrap();
            g.verify().unwrap();
            assert!(g.is_abelian());
        }
    }

    #[test]
    fn symmetric_groups() {
        let s3 = LampGroup::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert!(LampGroup::symmetric(2).unwrap().is_abelian());
        assert_eq!(LampGroup::symmetric(4).unwrap().order(), 24);
        assert!(LampGroup::symmetric(1).is_err());
    }

    #[test]
    fn trivial_group_rejected() {
        assert_eq!(LampGroup::cyclic(1), Err(Error::TrivialLampGroup(1)));
        assert_eq!(LampGroup::from_table(vec![vec![0]]), Err(Error::TrivialLampGroup(1)));
        assert!(LampGroup::parse_table("order 1\n0\n").is_err());
        assert!(LampGroup::cyclic(MAX_LAMP_ORDER + 1).is_err());
    }

    #[test]
    fn parse_s3_table() {
        // ids: 0 = e, 1 = (12), 2 = (13), 3 = (23), 4 = (123), 5 = (132)
        let text = "order 6\n\
                    0 1 2 3 4 5\n\
                    1 0 4 5 2 3\n\
                    2 5 0 4 3 1\n\
                    3 4 5 0 1 2\n\
                    4 3 1 2 5 0\n\
                    5 2 3 1 0 4\n";
        let g = LampGroup::parse_table(text).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.inverse(LampElement(4)), LampElement(5));
    }

    #[test]
    fn rejects_non_groups() {
        // identity fine, but not associative: a Latin square that is not a group
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(LampGroup::from_table(loop5), Err(Error::InvalidTable(_))));
        // row without identity column
        assert!(LampGroup::from_table(vec![vec![0, 1], vec![1, 1]]).is_err());
        // entry out of range
        assert!(LampGroup::from_table(vec![vec![0, 2], vec![1, 0]]).is_err());
        // ragged
        assert!(LampGroup::from_table(vec![vec![0, 1], vec![1]]).is_err());
        assert!(LampGroup::parse_table("order 2\n0 1\n").is_err());
        assert!(LampGroup::parse_table("ordr 2\n0 1\n1 0\n").is_err());
    }
}
