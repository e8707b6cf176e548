//! Brute-force oracles and instance generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use equivar::cohomology::{coboundary, h2_group, CyclicCoeff, OneCochain, TwoCocycle};
use equivar::exactalg::FpMatrix;
use equivar::gfunctor::samples::{characters, conjugate_adjunction, doubling_lax, shifted, ConjugateAdjunction, Doubling};
use equivar::gfunctor::{AdjunctionData, LaxGFunctor, Side};
use equivar::groups::{make_group, FinGroup, GroupKind};
use rand::Rng;

pub fn group(s: &str) -> Arc<FinGroup> {
    Arc::new(make_group(&s.parse::<GroupKind>().unwrap()).unwrap())
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

pub fn pow_mod(b: u64, e: u64, p: u64) -> u64 {
    (0..e).fold(1, |acc, _| acc * b % p)
}

/// Smallest generator of F_p^*, by checking orders.
pub fn primitive_root(p: u64) -> u64 {
    (2..p).find(|&r| (1..p - 1).all(|e| pow_mod(r, e, p) != 1)).unwrap_or(1)
}

/// φ(g,h) + φ(gh,k) = φ(h,k) + φ(g,hk) mod m, for every triple.
pub fn satisfies_cocycle_law(g: &FinGroup, m: u64, phi: &[u64]) -> bool {
    let n = g.order();
    let at = |a: usize, b: usize| phi[a * n + b] % m;
    (0..n).all(|a| {
        (0..n).all(|b| (0..n).all(|c| (at(a, b) + at(g.mul(a, b), c)) % m == (at(b, c) + at(a, g.mul(b, c))) % m))
    })
}

/// |H²(G, Z/m)| as |normalized cocycles| / |normalized coboundaries|, by enumeration.
pub fn brute_h2_order(g: &FinGroup, m: u64) -> u64 {
    let n = g.order();
    let k = (n - 1) * (n - 1);
    let mut cocycles = 0u64;
    let mut phi = vec![0u64; n * n];
    let total = m.pow(k as u32);
    for code in 0..total {
        let mut c = code;
        for a in 1..n {
            for b in 1..n {
                phi[a * n + b] = c % m;
                c /= m;
            }
        }
        if satisfies_cocycle_law(g, m, &phi) {
            cocycles += 1;
        }
    }
    let mut boundaries = BTreeSet::new();
    for code in 0..m.pow((n - 1) as u32) {
        let mut beta = vec![0u64; n];
        let mut c = code;
        for b in beta.iter_mut().skip(1) {
            *b = c % m;
            c /= m;
        }
        let d: Vec<u64> = (0..n * n)
            .map(|i| {
                let (a, b) = (i / n, i % n);
                (beta[a] + beta[b] + m - beta[g.mul(a, b)]) % m
            })
            .collect();
        boundaries.insert(d);
    }
    cocycles / boundaries.len() as u64
}

/// Square matrices over F_p, row-major, acting on column vectors.
pub type Mat = Vec<u64>;

pub fn mat_mul(p: u64, d: usize, a: &Mat, b: &Mat) -> Mat {
    let mut out = vec![0; d * d];
    for i in 0..d {
        for j in 0..d {
            out[i * d + j] = (0..d).map(|k| a[i * d + k] * b[k * d + j]).sum::<u64>() % p;
        }
    }
    out
}

pub fn mat_scale(p: u64, a: &Mat, s: u64) -> Mat {
    a.iter().map(|x| x * s % p).collect()
}

pub fn mat_id(d: usize) -> Mat {
    (0..d * d).map(|i| u64::from(i / d == i % d)).collect()
}

/// GL_d(F_p) for d ≤ 2 by listing all matrices with nonzero determinant.
pub fn gl(p: u64, d: usize) -> Vec<Mat> {
    match d {
        0 => vec![Vec::new()],
        1 => (1..p).map(|a| vec![a]).collect(),
        2 => {
            let mut out = Vec::new();
            for a in 0..p {
                for b in 0..p {
                    for c in 0..p {
                        for e in 0..p {
                            if !(a * e + p * p - b * c).is_multiple_of(p) {
                                out.push(vec![a, b, c, e]);
                            }
                        }
                    }
                }
            }
            out
        }
        _ => panic!("only d ≤ 2"),
    }
}

pub fn inverse(p: u64, d: usize, a: &Mat, gl: &[Mat]) -> Mat {
    gl.iter().find(|b| mat_mul(p, d, a, b) == mat_id(d)).unwrap().clone()
}

/// Iso classes of families `θ_g ∈ GL_d` with `θ_{gh} = s(g,h) θ_h θ_g`, under simultaneous conjugation.
pub fn twisted_class_count(p: u64, d: usize, g: &FinGroup, s: impl Fn(usize, usize) -> u64) -> usize {
    let n = g.order();
    let gl = gl(p, d);
    let gens = g.generating_sequence();
    let mut valid: Vec<Vec<Mat>> = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    'outer: loop {
        // θ on generators, extended along right multiplication by generators
        let mut theta: Vec<Option<Mat>> = vec![None; n];
        let see = s(0, 0);
        let inv_see = (1..p).find(|x| x * see % p == 1).unwrap();
        theta[0] = Some(mat_scale(p, &mat_id(d), inv_see));
        for (i, &t) in gens.iter().enumerate() {
            theta[t] = Some(gl[choice[i]].clone());
        }
        // fixing the generators determines the rest; consistency is checked below
        let mut changed = true;
        while changed {
            changed = false;
            for a in 0..n {
                let Some(ta) = theta[a].clone() else { continue };
                for &t in &gens {
                    let at = g.mul(a, t);
                    if theta[at].is_none() {
                        let tt = theta[t].as_ref().unwrap();
                        theta[at] = Some(mat_scale(p, &mat_mul(p, d, tt, &ta), s(a, t)));
                        changed = true;
                    }
                }
            }
        }
        let mut ok = true;
        let family: Vec<Mat> = theta.into_iter().map(|t| t.unwrap()).collect();
        for a in 0..n {
            for b in 0..n {
                let rhs = mat_scale(p, &mat_mul(p, d, &family[b], &family[a]), s(a, b));
                if family[g.mul(a, b)] != rhs {
                    ok = false;
                }
            }
        }
        if ok {
            valid.push(family);
        }
        for c in choice.iter_mut() {
            *c += 1;
            if *c < gl.len() {
                continue 'outer;
            }
            *c = 0;
        }
        break;
    }
    let inverses: Vec<Mat> = gl.iter().map(|a| inverse(p, d, a, &gl)).collect();
    let mut seen: BTreeSet<Vec<Mat>> = BTreeSet::new();
    let mut classes = 0;
    for fam in &valid {
        if seen.contains(fam) {
            continue;
        }
        classes += 1;
        for (a, ai) in gl.iter().zip(&inverses) {
            seen.insert(fam.iter().map(|t| mat_mul(p, d, &mat_mul(p, d, a, t), ai)).collect());
        }
    }
    classes
}

/// A uniformly random cocycle in a random class: representative plus a random coboundary.
pub fn random_cocycle(rng: &mut impl Rng, g: &Arc<FinGroup>, p: u32) -> TwoCocycle {
    let coeff = CyclicCoeff::units_of(p).unwrap();
    let h2 = h2_group(g.clone(), coeff);
    let classes = h2.all_classes();
    let rep = h2.representative(&classes[rng.random_range(0..classes.len())]);
    let beta: Vec<u64> = (0..g.order()).map(|_| rng.random_range(0..u64::from(p - 1))).collect();
    rep.add(&coboundary(&OneCochain::new(g.clone(), coeff, beta).unwrap())).unwrap()
}

pub fn random_invertible(rng: &mut impl Rng, p: u32) -> FpMatrix {
    loop {
        let rows: Vec<Vec<i64>> = (0..2).map(|_| (0..2).map(|_| rng.random_range(0..p as i64)).collect()).collect();
        let m = FpMatrix::from_rows(p, &rows).unwrap();
        if m.inverse().is_some() {
            return m;
        }
    }
}

/// Group and prime pairs for which F_p^* has enough roots of unity for characters.
pub const SETTINGS: [(&str, u32); 4] = [("cyclic:2", 5), ("cyclic:3", 7), ("klein", 5), ("cyclic:2", 7)];

pub fn random_setting(rng: &mut impl Rng) -> (Arc<FinGroup>, u32) {
    let (g, p) = SETTINGS[rng.random_range(0..SETTINGS.len())];
    (group(g), p)
}

/// Random lax functor `k ↦ k²` between cocycle actions.
pub fn random_doubling(rng: &mut impl Rng) -> LaxGFunctor {
    let (g, p) = random_setting(rng);
    let phi = random_cocycle(rng, &g, p);
    let chars = characters(&g, p);
    let pick = |rng: &mut dyn rand::RngCore| chars[rng.random_range(0..chars.len())].clone();
    let params = Doubling {
        side: if rng.random_bool(0.5) { Side::Right } else { Side::Left },
        beta: (0..g.order()).map(|_| rng.random_range(0..u64::from(p - 1))).collect(),
        chi: [pick(rng), pick(rng)],
        q: random_invertible(rng, p),
        keep: [rng.random_bool(0.7), rng.random_bool(0.7)],
    };
    doubling_lax(&phi, &params).unwrap()
}

/// Random conjugation adjunction with a right lax structure on the right adjoint.
pub fn random_conjugation(rng: &mut impl Rng) -> (LaxGFunctor, AdjunctionData) {
    let (g, p) = random_setting(rng);
    let phi = random_cocycle(rng, &g, p);
    random_conjugation_from(rng, &phi)
}

pub fn random_conjugation_from(rng: &mut impl Rng, phi: &TwoCocycle) -> (LaxGFunctor, AdjunctionData) {
    let p = phi.coeff().field_link().unwrap().p;
    let params = ConjugateAdjunction {
        beta: (0..phi.group().order()).map(|_| rng.random_range(0..u64::from(p - 1))).collect(),
        q: random_invertible(rng, p),
        s: rng.random_range(1..p),
        c: rng.random_range(1..p),
    };
    conjugate_adjunction(phi, &params).unwrap()
}

pub fn shift(phi: &TwoCocycle, beta: &[u64]) -> TwoCocycle {
    shifted(phi, beta).unwrap()
}

/// A doubling functor followed by a conjugation equivalence, on a common side.
pub fn random_composable(rng: &mut impl Rng) -> (LaxGFunctor, LaxGFunctor) {
    let (g, p) = random_setting(rng);
    let phi = random_cocycle(rng, &g, p);
    let chars = characters(&g, p);
    let side = if rng.random_bool(0.5) { Side::Right } else { Side::Left };
    let beta: Vec<u64> = (0..g.order()).map(|_| rng.random_range(0..u64::from(p - 1))).collect();
    let params = Doubling {
        side,
        beta: beta.clone(),
        chi: [chars[rng.random_range(0..chars.len())].clone(), chars[rng.random_range(0..chars.len())].clone()],
        q: random_invertible(rng, p),
        keep: [rng.random_bool(0.7), rng.random_bool(0.7)],
    };
    let first = doubling_lax(&phi, &params).unwrap();
    let (r, _) = random_conjugation_from(rng, &shift(&phi, &beta));
    let second = match side {
        Side::Right => r,
        Side::Left => r.invert().unwrap(),
    };
    (first, second)
}
