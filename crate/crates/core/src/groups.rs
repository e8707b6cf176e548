//! Finite groups as multiplication tables. Element 0 is always the identity.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FinGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    name: String,
}

/// Constructor recipes for the bundled groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Product(Box<GroupKind>, Box<GroupKind>),
    FromTable { order: usize, table: Vec<usize> },
}

pub fn make_group(kind: &GroupKind) -> Result<FinGroup> {
    match kind {
        GroupKind::Cyclic(n) => {
            let n = *n;
            if n == 0 {
                return Err(Error::NotAGroup("cyclic group of order 0".into()));
            }
            let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
            FinGroup::build(n, table, format!("Z/{n}"))
        }
        GroupKind::Dihedral(n) => {
            let n = *n;
            if n == 0 {
                return Err(Error::NotAGroup("dihedral group with n = 0".into()));
            }
            // r^i s^j  <->  i + n j ;  s r = r^{-1} s
            let order = 2 * n;
            let mut table = vec![0; order * order];
            for a in 0..order {
                for b in 0..order {
                    let (i1, j1) = (a % n, a / n);
                    let (i2, j2) = (b % n, b / n);
                    let i = if j1 == 0 { (i1 + i2) % n } else { (i1 + n - i2) % n };
                    table[a * order + b] = i + n * ((j1 + j2) % 2);
                }
            }
            FinGroup::build(order, table, format!("D{n}"))
        }
        GroupKind::Symmetric(n) => {
            let n = *n;
            if n == 0 || n > 4 {
                return Err(Error::LimitExceeded(format!("symmetric group S{n} (n must be 1..=4)")));
            }
            let perms = permutations(n);
            let order = perms.len();
            let mut table = vec![0; order * order];
            for (a, pa) in perms.iter().enumerate() {
                for (b, pb) in perms.iter().enumerate() {
                    // (a·b)(x) = a(b(x))
                    let comp: Vec<usize> = (0..n).map(|x| pa[pb[x]]).collect();
                    table[a * order + b] = perms.iter().position(|q| *q == comp).unwrap();
                }
            }
            FinGroup::build(order, table, format!("S{n}"))
        }
        GroupKind::Product(g, h) => {
            let (g, h) = (make_group(g)?, make_group(h)?);
            let (m, n) = (g.order, h.order);
            let order = m * n;
            if order > MAX_ORDER {
                return Err(Error::LimitExceeded(format!("group order {order} > {MAX_ORDER}")));
            }
            let mut table = vec![0; order * order];
            for a in 0..order {
                for b in 0..order {
                    table[a * order + b] = g.mul(a / n, b / n) * n + h.mul(a % n, b % n);
                }
            }
            FinGroup::build(order, table, format!("{}x{}", g.name, h.name))
        }
        GroupKind::FromTable { order, table } => {
            FinGroup::build(*order, table.clone(), format!("table{order}"))
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for x in 0..n {
            if !prefix.contains(&x) {
                prefix.push(x);
                rec(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, &mut out);
    out
}

impl FinGroup {
    fn build(order: usize, table: Vec<usize>, name: String) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::LimitExceeded(format!("group order {order} outside 1..={MAX_ORDER}")));
        }
        if table.len() != order * order {
            return Err(Error::NotAGroup(format!(
                "table has {} entries, expected {}",
                table.len(),
                order * order
            )));
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= order) {
            return Err(Error::NotAGroup(format!("entry {bad} out of range")));
        }
        let t = |a: usize, b: usize| table[a * order + b];
        for g in 0..order {
            if t(0, g) != g || t(g, 0) != g {
                return Err(Error::NotAGroup(format!("element 0 is not an identity for {g}")));
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if t(t(a, b), c) != t(a, t(b, c)) {
                        return Err(Error::NotAGroup(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        let mut inverse = Vec::with_capacity(order);
        for g in 0..order {
            let Some(h) = (0..order).find(|&h| t(g, h) == 0 && t(h, g) == 0) else {
                return Err(Error::NotAGroup(format!("element {g} has no inverse")));
            };
            inverse.push(h);
        }
        Ok(FinGroup { order, table, inverse, name })
    }

    pub fn from_table(order: usize, table: Vec<usize>) -> Result<Self> {
        make_group(&GroupKind::FromTable { order, table })
    }

    pub fn trivial() -> Self {
        make_group(&GroupKind::Cyclic(1)).expect("trivial group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Greedy generating sequence: repeatedly add the smallest element not yet generated.
    pub fn generating_sequence(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut generated = self.closure(&gens);
        while let Some(g) = (0..self.order).find(|&g| !generated[g]) {
            gens.push(g);
            generated = self.closure(&gens);
        }
        gens
    }

    /// Membership mask of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &s in gens {
                let y = self.mul(x, s);
                if !inside[y] {
                    inside[y] = true;
                    frontier.push(y);
                }
            }
        }
        inside
    }
}

pub fn element_order(group: &FinGroup, g: usize) -> usize {
    assert!(g < group.order(), "element index out of range");
    let mut x = g;
    let mut k = 1;
    while x != 0 {
        x = group.mul(x, g);
        k += 1;
    }
    k
}

impl fmt::Display for FinGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// `cyclic:4`, `dihedral:3`, `symmetric:3`, `klein`, and products joined by `x`,
/// e.g. `cyclic:2xcyclic:2`.
impl FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parts: Vec<&str> = s.split('x').filter(|p| !p.is_empty()).collect();
        if parts.len() > 1 {
            let mut kinds = parts.iter().map(|p| p.parse::<GroupKind>()).collect::<Result<Vec<_>>>()?;
            let mut acc = kinds.remove(0);
            for k in kinds {
                acc = GroupKind::Product(Box::new(acc), Box::new(k));
            }
            return Ok(acc);
        }
        if s == "klein" || s == "v4" {
            return Ok(GroupKind::Product(
                Box::new(GroupKind::Cyclic(2)),
                Box::new(GroupKind::Cyclic(2)),
            ));
        }
        let (name, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::Input(format!("group spec `{s}` must look like kind:n")))?;
        let n: usize = arg
            .parse()
            .map_err(|_| Error::Input(format!("bad group parameter `{arg}`")))?;
        match name {
            "cyclic" | "Z" => Ok(GroupKind::Cyclic(n)),
            "dihedral" | "D" => Ok(GroupKind::Dihedral(n)),
            "symmetric" | "S" => Ok(GroupKind::Symmetric(n)),
            _ => Err(Error::Input(format!("unknown group kind `{name}`"))),
        }
    }
}

/// Serialized form: order plus row-major multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupTable {
    pub order: usize,
    pub table: Vec<usize>,
}

impl From<&FinGroup> for GroupTable {
    fn from(g: &FinGroup) -> Self {
        GroupTable { order: g.order, table: g.table.clone() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bundled() -> Vec<FinGroup> {
        let mut v = Vec::new();
        for n in 1..=12 {
            v.push(make_group(&GroupKind::Cyclic(n)).unwrap());
        }
        for n in 1..=6 {
            v.push(make_group(&GroupKind::Dihedral(n)).unwrap());
        }
        for n in 1..=4 {
            v.push(make_group(&GroupKind::Symmetric(n)).unwrap());
        }
        v.push(make_group(&"cyclic:2xcyclic:2".parse().unwrap()).unwrap());
        v.push(make_group(&"cyclic:2xsymmetric:3".parse().unwrap()).unwrap());
        v
    }

    fn assert_axioms(g: &FinGroup) {
        let n = g.order();
        for a in 0..n {
            assert_eq!(g.mul(0, a), a);
            assert_eq!(g.mul(a, 0), a);
            assert_eq!(g.mul(a, g.inv(a)), 0);
            assert_eq!(g.mul(g.inv(a), a), 0);
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn all_bundled_groups_satisfy_axioms_and_lagrange() {
        for g in bundled() {
            assert_axioms(&g);
            for x in g.elements() {
                assert_eq!(g.order() % element_order(&g, x), 0, "{g}");
            }
        }
    }

    #[test]
    fn trivial_group() {
        let g = make_group(&GroupKind::Cyclic(1)).unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.generating_sequence().is_empty());
    }

    #[test]
    fn klein_four_is_exponent_two() {
        let g = make_group(&"klein".parse().unwrap()).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.elements().all(|x| g.mul(x, x) == 0));
        assert_eq!(g.generating_sequence(), vec![1, 2]);
    }

    #[test]
    fn s3_is_nonabelian() {
        let g = make_group(&GroupKind::Symmetric(3)).unwrap();
        assert_eq!(g.order(), 6);
        let witness = g
            .elements()
            .flat_map(|a| g.elements().map(move |b| (a, b)))
            .find(|&(a, b)| g.mul(a, b) != g.mul(b, a));
        assert!(witness.is_some());
        assert!(!g.is_abelian());
    }

    #[test]
    fn element_orders() {
        let c6 = make_group(&GroupKind::Cyclic(6)).unwrap();
        assert_eq!(element_order(&c6, 0), 1);
        assert_eq!(element_order(&c6, 1), 6);
        let s3 = make_group(&GroupKind::Symmetric(3)).unwrap();
        // permutations in lex order: [0,2,1] is a transposition
        let t = 1;
        assert_ne!(t, s3.identity());
        assert_eq!(s3.mul(t, t), 0);
        assert_eq!(element_order(&s3, t), 2);
    }

    #[test]
    fn bad_table_reports_failure() {
        // identity ok, but 1*1 = 1 breaks inverses
        let err = FinGroup::from_table(2, vec![0, 1, 1, 1]).unwrap_err();
        assert!(matches!(err, Error::NotAGroup(_)));
        assert!(matches!(FinGroup::from_table(2, vec![0, 1, 1]), Err(Error::NotAGroup(_))));
        assert!(matches!(make_group(&GroupKind::Symmetric(5)), Err(Error::LimitExceeded(_))));
    }
}
