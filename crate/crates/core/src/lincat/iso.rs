use super::{LinCat, Morphism};
use crate::error::{Limits, Result};
use crate::exactalg::LexVectors;

/// Isomorphism classes of objects, with chosen isomorphisms to representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoClasses {
    /// Index into `reps` for each object.
    pub class_of: Vec<usize>,
    /// Smallest object index of each class, ascending.
    pub reps: Vec<usize>,
    /// `to_rep[x]: x → reps[class_of[x]]`
    pub to_rep: Vec<Morphism>,
    /// `from_rep[x]: reps[class_of[x]] → x`, inverse of `to_rep[x]`
    pub from_rep: Vec<Morphism>,
}

impl IsoClasses {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn rep_of(&self, x: usize) -> usize {
        self.reps[self.class_of[x]]
    }
}

fn profile(c: &LinCat, x: usize) -> Vec<(usize, usize)> {
    c.objects().map(|z| (c.dim(x, z), c.dim(z, x))).collect()
}

/// First isomorphism `x → y` in lexicographic coordinate order, with its inverse.
pub fn find_iso_limited(c: &LinCat, x: usize, y: usize, limits: &Limits) -> Result<Option<(Morphism, Morphism)>> {
    if x == y {
        let id = c.identity(x).to_vec();
        return Ok(Some((id.clone(), id)));
    }
    let d = c.dim(x, y);
    if d != c.dim(y, x) || c.dim(x, x) != c.dim(y, y) || profile(c, x) != profile(c, y) {
        return Ok(None);
    }
    limits.check_space(c.modulus(), d)?;
    for f in LexVectors::new(c.modulus(), d) {
        if let Some(g) = c.inverse(x, y, &f) {
            return Ok(Some((f, g)));
        }
    }
    Ok(None)
}

/// All isomorphisms `x → y` in lexicographic coordinate order.
pub fn isomorphisms<'a>(
    c: &'a LinCat,
    x: usize,
    y: usize,
    limits: &Limits,
) -> Result<impl Iterator<Item = Morphism> + 'a> {
    let d = c.dim(x, y);
    limits.check_space(c.modulus(), d)?;
    let possible = d == c.dim(y, x) && c.dim(x, x) == c.dim(y, y);
    Ok(LexVectors::new(c.modulus(), d)
        .filter(move |f| possible && c.is_iso(x, y, f)))
}

/// Like [`find_iso_limited`] with default limits; a search past the cap counts as "not found".
pub fn find_iso(c: &LinCat, x: usize, y: usize) -> Option<(Morphism, Morphism)> {
    find_iso_limited(c, x, y, &Limits::default()).ok().flatten()
}

/// Partition objects into isomorphism classes, keeping the smallest index of each class.
pub fn iso_classes(c: &LinCat, limits: &Limits) -> Result<IsoClasses> {
    let n = c.len();
    let mut class_of = vec![usize::MAX; n];
    let mut reps = Vec::new();
    let mut to_rep = vec![Vec::new(); n];
    let mut from_rep = vec![Vec::new(); n];
    for x in 0..n {
        let mut found = None;
        for (k, &r) in reps.iter().enumerate() {
            if let Some((f, g)) = find_iso_limited(c, x, r, limits)? {
                found = Some((k, f, g));
                break;
            }
        }
        let (k, f, g) = found.unwrap_or_else(|| {
            reps.push(x);
            let id = c.identity(x).to_vec();
            (reps.len() - 1, id.clone(), id)
        });
        class_of[x] = k;
        to_rep[x] = f;
        from_rep[x] = g;
    }
    Ok(IsoClasses { class_of, reps, to_rep, from_rep })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincat::vect_cat;

    #[test]
    fn vect_objects_are_pairwise_non_isomorphic() {
        let c = vect_cat(3, 3).unwrap();
        let classes = iso_classes(&c, &Limits::default()).unwrap();
        assert_eq!(classes.reps, vec![0, 1, 2, 3]);
        for x in 0..4 {
            assert_eq!(classes.to_rep[x], c.identity(x));
        }
    }
}
