//! Two-cocycles of a finite group with coefficients in a cyclic group `Z/m`
//! (trivial action), and H² computed from Smith normal forms.
//!
//! All cochains are written additively. When `Z/m` is linked to F_p^* through a
//! primitive root `r`, the value `a` stands for the scalar `r^a`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result, Violation};
use crate::exactalg::{fp, smith_normal_form, IntMatrix, SmithForm};
use crate::groups::FinGroup;

/// Identification of `Z/(p-1)` with F_p^* via `a ↦ root^a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldLink {
    pub p: u32,
    pub root: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyclicCoeff {
    m: u64,
    field_link: Option<FieldLink>,
}

impl CyclicCoeff {
    pub fn new(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::Input("coefficient group Z/0 is not finite".into()));
        }
        Ok(CyclicCoeff { m, field_link: None })
    }

    /// The unit group of F_p, with the smallest primitive root as generator.
    pub fn units_of(p: u32) -> Result<Self> {
        if !fp::is_prime(p) {
            return Err(Error::Input(format!("{p} is not prime")));
        }
        Ok(CyclicCoeff {
            m: (p - 1) as u64,
            field_link: Some(FieldLink { p, root: fp::primitive_root(p) }),
        })
    }

    pub fn order(&self) -> u64 {
        self.m
    }

    pub fn field_link(&self) -> Option<FieldLink> {
        self.field_link
    }

    /// Scalar in F_p represented by `a` (requires a field link).
    pub fn to_scalar(&self, a: u64) -> Option<u32> {
        self.field_link.map(|l| fp::pow(l.root, a, l.p))
    }
}

/// First failing triple of the cocycle law.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FailingTriple(pub usize, pub usize, pub usize);

impl From<FailingTriple> for Violation {
    fn from(t: FailingTriple) -> Self {
        Violation::Cocycle { g: t.0, h: t.1, k: t.2 }
    }
}

/// Checks φ(g,h) + φ(gh,k) = φ(h,k) + φ(g,hk) over all triples in lexicographic order.
pub fn cocycle_check(group: &FinGroup, coeff: &CyclicCoeff, values: &[u64]) -> Result<(), FailingTriple> {
    let n = group.order();
    assert_eq!(values.len(), n * n, "cocycle grid must be |G| x |G|");
    let m = coeff.m;
    let v = |a: usize, b: usize| values[a * n + b] % m;
    for g in 0..n {
        for h in 0..n {
            for k in 0..n {
                let lhs = (v(g, h) + v(group.mul(g, h), k)) % m;
                let rhs = (v(h, k) + v(g, group.mul(h, k))) % m;
                if lhs != rhs {
                    return Err(FailingTriple(g, h, k));
                }
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCocycle {
    group: Arc<FinGroup>,
    coeff: CyclicCoeff,
    values: Vec<u64>,
}

impl TwoCocycle {
    pub fn new(group: Arc<FinGroup>, coeff: CyclicCoeff, values: Vec<u64>) -> Result<Self> {
        let n = group.order();
        if values.len() != n * n {
            return Err(Error::ShapeMismatch(format!(
                "cocycle grid has {} entries, expected {}",
                values.len(),
                n * n
            )));
        }
        let values: Vec<u64> = values.into_iter().map(|v| v % coeff.m).collect();
        cocycle_check(&group, &coeff, &values).map_err(Violation::from)?;
        Ok(TwoCocycle { group, coeff, values })
    }

    pub fn zero(group: Arc<FinGroup>, coeff: CyclicCoeff) -> Self {
        let n = group.order();
        TwoCocycle { group, coeff, values: vec![0; n * n] }
    }

    pub fn group(&self) -> &Arc<FinGroup> {
        &self.group
    }

    pub fn coeff(&self) -> &CyclicCoeff {
        &self.coeff
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn value(&self, g: usize, h: usize) -> u64 {
        self.values[g * self.group.order() + h]
    }

    /// φ(1,g) = φ(g,1) = 0 for all g.
    pub fn is_normalized(&self) -> bool {
        self.group.elements().all(|g| self.value(0, g) == 0 && self.value(g, 0) == 0)
    }

    pub fn add(&self, other: &TwoCocycle) -> Result<TwoCocycle> {
        if self.group != other.group || self.coeff != other.coeff {
            return Err(Error::ShapeMismatch("cocycles over different data".into()));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| (a + b) % self.coeff.m).collect();
        Ok(TwoCocycle { group: self.group.clone(), coeff: self.coeff, values })
    }

    pub fn scale(&self, k: u64) -> TwoCocycle {
        let m = self.coeff.m;
        TwoCocycle {
            group: self.group.clone(),
            coeff: self.coeff,
            values: self.values.iter().map(|v| (v * (k % m)) % m).collect(),
        }
    }

    /// The cohomologous normalized cocycle φ − d(const φ(1,1)).
    pub fn normalized(&self) -> TwoCocycle {
        let c = self.value(0, 0);
        let m = self.coeff.m;
        TwoCocycle {
            group: self.group.clone(),
            coeff: self.coeff,
            values: self.values.iter().map(|v| (v + m - c) % m).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneCochain {
    pub group: Arc<FinGroup>,
    pub coeff: CyclicCoeff,
    pub values: Vec<u64>,
}

impl OneCochain {
    pub fn new(group: Arc<FinGroup>, coeff: CyclicCoeff, values: Vec<u64>) -> Result<Self> {
        if values.len() != group.order() {
            return Err(Error::ShapeMismatch("1-cochain must have |G| entries".into()));
        }
        let values = values.into_iter().map(|v| v % coeff.m).collect();
        Ok(OneCochain { group, coeff, values })
    }
}

/// (dδ)(g,h) = δ(g) + δ(h) − δ(gh).
pub fn coboundary(delta: &OneCochain) -> TwoCocycle {
    let g = &delta.group;
    let n = g.order();
    let m = delta.coeff.m;
    let mut values = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            values[a * n + b] = (delta.values[a] + delta.values[b] + m - delta.values[g.mul(a, b)]) % m;
        }
    }
    TwoCocycle { group: g.clone(), coeff: delta.coeff, values }
}

/// H²(G, Z/m) ≅ ⊕ Z/dⱼ together with the data needed to map cocycles to classes.
#[derive(Debug, Clone)]
pub struct H2Group {
    group: Arc<FinGroup>,
    coeff: CyclicCoeff,
    /// Invariant factors > 1, in divisibility order.
    pub invariant_factors: Vec<u64>,
    /// One normalized cocycle per invariant factor, generating that cyclic summand.
    pub representatives: Vec<TwoCocycle>,
    d2: SmithForm,
    /// per Smith coordinate of Z²: order gᵢ = gcd(dᵢ, m)
    cycle_orders: Vec<u64>,
    relations: SmithForm,
    /// positions (in `relations.d`) of the nontrivial factors
    factor_slots: Vec<usize>,
}

/// Index of normalized cochain coordinates: non-identity elements.
fn nonid(n: usize) -> usize {
    n - 1
}

/// Coboundary matrix from normalized 2-cochains to normalized 3-cochains.
fn d2_matrix(group: &FinGroup) -> IntMatrix {
    let n = group.order();
    let k = nonid(n);
    let idx2 = |g: usize, h: usize| -> Option<usize> {
        (g != 0 && h != 0).then(|| (g - 1) * k + (h - 1))
    };
    let mut m = IntMatrix::zeros(k * k * k, k * k);
    for g in 1..n {
        for h in 1..n {
            for l in 1..n {
                let row = ((g - 1) * k + (h - 1)) * k + (l - 1);
                // (d2 φ)(g,h,l) = φ(h,l) − φ(gh,l) + φ(g,hl) − φ(g,h)
                let terms = [
                    (idx2(h, l), 1i64),
                    (idx2(group.mul(g, h), l), -1),
                    (idx2(g, group.mul(h, l)), 1),
                    (idx2(g, h), -1),
                ];
                for (col, sign) in terms {
                    if let Some(c) = col {
                        let cur = m.get(row, c).clone();
                        m.set(row, c, cur + sign);
                    }
                }
            }
        }
    }
    m
}

/// Coboundary matrix from normalized 1-cochains to normalized 2-cochains.
fn d1_matrix(group: &FinGroup, normalized: bool) -> IntMatrix {
    let n = group.order();
    if normalized {
        let k = nonid(n);
        let mut m = IntMatrix::zeros(k * k, k);
        for g in 1..n {
            for h in 1..n {
                let row = (g - 1) * k + (h - 1);
                let gh = group.mul(g, h);
                let mut add = |c: usize, s: i64| {
                    let cur = m.get(row, c).clone();
                    m.set(row, c, cur + s);
                };
                add(g - 1, 1);
                add(h - 1, 1);
                if gh != 0 {
                    add(gh - 1, -1);
                }
            }
        }
        m
    } else {
        let mut m = IntMatrix::zeros(n * n, n);
        for g in 0..n {
            for h in 0..n {
                let row = g * n + h;
                let gh = group.mul(g, h);
                for (c, s) in [(g, 1i64), (h, 1), (gh, -1)] {
                    let cur = m.get(row, c).clone();
                    m.set(row, c, cur + s);
                }
            }
        }
        m
    }
}

fn big_mod(v: &BigInt, m: u64) -> u64 {
    v.mod_floor(&BigInt::from(m)).to_u64().unwrap()
}

fn gcd_with(d: &BigInt, m: u64) -> u64 {
    big_mod(d, m).gcd(&m)
}

pub fn h2_group(group: Arc<FinGroup>, coeff: CyclicCoeff) -> H2Group {
    let n = group.order();
    let k = nonid(n);
    let m = coeff.m;
    let d2 = smith_normal_form(&d2_matrix(&group));
    let dim2 = k * k;
    let diag = d2.d.diagonal();
    // Z² in coordinates y = V⁻¹x: yᵢ ∈ (m/gᵢ)·Z/m
    let cycle_orders: Vec<u64> = (0..dim2)
        .map(|i| match diag.get(i) {
            Some(d) => gcd_with(d, m),
            None => m,
        })
        .collect();

    // B² images expressed in Z² generator coordinates
    let d1 = d1_matrix(&group, true);
    let mut rel_rows: Vec<Vec<i64>> = Vec::new();
    for j in 0..k {
        let col: Vec<BigInt> = (0..dim2).map(|r| d1.get(r, j).clone()).collect();
        let y = d2.v_inv.apply(&col);
        let row: Vec<i64> = (0..dim2)
            .map(|i| {
                let step = m / cycle_orders[i];
                let yi = big_mod(&y[i], m);
                debug_assert_eq!(yi % step, 0, "coboundary outside cocycles");
                ((yi / step) % cycle_orders[i]) as i64
            })
            .collect();
        rel_rows.push(row);
    }
    for (i, &gi) in cycle_orders.iter().enumerate() {
        let mut row = vec![0i64; dim2];
        row[i] = gi as i64;
        rel_rows.push(row);
    }
    let flat: Vec<i64> = rel_rows.iter().flatten().copied().collect();
    let rel = IntMatrix::from_i64(rel_rows.len(), dim2, &flat).expect("relation shape");
    let relations = smith_normal_form(&rel);
    let rdiag = relations.d.diagonal();

    let mut invariant_factors = Vec::new();
    let mut factor_slots = Vec::new();
    let mut representatives = Vec::new();
    for (j, dj) in rdiag.iter().enumerate() {
        let dj = dj.to_u64().expect("factor fits");
        if dj == 1 {
            continue;
        }
        invariant_factors.push(dj);
        factor_slots.push(j);
        // generator: row e_j · V_R⁻¹ in Z² coordinates
        let coords: Vec<BigInt> = (0..dim2).map(|i| relations.v_inv.get(j, i).clone()).collect();
        representatives.push(cocycle_from_z2_coords(&group, coeff, &d2, &cycle_orders, &coords));
    }
    H2Group {
        group,
        coeff,
        invariant_factors,
        representatives,
        d2,
        cycle_orders,
        relations,
        factor_slots,
    }
}

fn cocycle_from_z2_coords(
    group: &Arc<FinGroup>,
    coeff: CyclicCoeff,
    d2: &SmithForm,
    orders: &[u64],
    coords: &[BigInt],
) -> TwoCocycle {
    let n = group.order();
    let k = nonid(n);
    let m = coeff.m;
    let y: Vec<BigInt> = coords
        .iter()
        .zip(orders)
        .map(|(c, &g)| BigInt::from(big_mod(c, g)) * BigInt::from(m / g))
        .collect();
    let x = d2.v.apply(&y);
    let mut values = vec![0u64; n * n];
    for g in 1..n {
        for h in 1..n {
            values[g * n + h] = big_mod(&x[(g - 1) * k + (h - 1)], m);
        }
    }
    TwoCocycle { group: group.clone(), coeff, values }
}

impl H2Group {
    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn group(&self) -> &Arc<FinGroup> {
        &self.group
    }

    /// Coordinates of the class of `phi` in ⊕ Z/dⱼ.
    pub fn class_of(&self, phi: &TwoCocycle) -> Result<Vec<u64>> {
        if phi.group != self.group || phi.coeff != self.coeff {
            return Err(Error::ShapeMismatch("cocycle over a different group or coefficient".into()));
        }
        let phi = phi.normalized();
        let n = self.group.order();
        let k = nonid(n);
        let m = self.coeff.m;
        let x: Vec<BigInt> = (1..n)
            .flat_map(|g| (1..n).map(move |h| (g, h)))
            .map(|(g, h)| BigInt::from(phi.value(g, h)))
            .collect();
        debug_assert_eq!(x.len(), k * k);
        let y = self.d2.v_inv.apply(&x);
        let z: Vec<BigInt> = (0..k * k)
            .map(|i| {
                let step = m / self.cycle_orders[i];
                BigInt::from(big_mod(&y[i], m) / step)
            })
            .collect();
        // x' = z · V_R
        let cols = self.relations.v.cols();
        Ok(self
            .factor_slots
            .iter()
            .zip(&self.invariant_factors)
            .map(|(&j, &dj)| {
                let s: BigInt = (0..cols).map(|i| &z[i] * self.relations.v.get(i, j)).sum();
                big_mod(&s, dj)
            })
            .collect())
    }

    /// Normalized representative of the class with the given coordinates.
    pub fn representative(&self, coords: &[u64]) -> TwoCocycle {
        let mut acc = TwoCocycle::zero(self.group.clone(), self.coeff);
        for (rep, &c) in self.representatives.iter().zip(coords) {
            acc = acc.add(&rep.scale(c)).expect("same data");
        }
        acc
    }

    /// All class coordinate vectors, in lexicographic order.
    pub fn all_classes(&self) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for &d in &self.invariant_factors {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..d).map(move |c| {
                        let mut v = prefix.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
        }
        out
    }
}

/// Find δ with φ + dδ = φ′, or report that none exists.
pub fn cohomologous(phi: &TwoCocycle, phi_prime: &TwoCocycle) -> Result<OneCochain> {
    if phi.group != phi_prime.group || phi.coeff != phi_prime.coeff {
        return Err(Error::ShapeMismatch("cocycles over different data".into()));
    }
    let group = &phi.group;
    let n = group.order();
    let m = phi.coeff.m;
    let d1 = d1_matrix(group, false);
    let s = smith_normal_form(&d1);
    let target: Vec<BigInt> = phi_prime
        .values
        .iter()
        .zip(&phi.values)
        .map(|(a, b)| BigInt::from((a + m - b) % m))
        .collect();
    let ut = s.u.apply(&target);
    let diag = s.d.diagonal();
    let mut y = vec![BigInt::zero(); n];
    for (i, rhs) in ut.iter().enumerate() {
        let r = big_mod(rhs, m);
        let d = diag.get(i).map_or(0, |d| big_mod(d, m));
        let g = d.gcd(&m);
        if !r.is_multiple_of(g) {
            return Err(Error::NotCohomologous);
        }
        if i < n && d != 0 {
            // d y ≡ r (mod m)
            let (dd, rr, mm) = (d / g, r / g, m / g);
            let inv = mod_inverse(dd % mm, mm);
            y[i] = BigInt::from((rr % mm) * inv % mm.max(1));
        }
    }
    let x = s.v.apply(&y);
    let delta = OneCochain::new(group.clone(), phi.coeff, x.iter().map(|v| big_mod(v, m)).collect())?;
    debug_assert_eq!(phi.add(&coboundary(&delta)).unwrap().values, phi_prime.values);
    Ok(delta)
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (m as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(m as i128) as u64
}
