//! Finite matrix groups over cyclotomic fields: closure, orbits, and
//! conversion to permutation groups.

use alloc::vec::Vec;

use crate::algebra::cyclotomic::Cyclotomic;
use crate::algebra::rational::Rational;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// A square matrix with exact cyclotomic entries, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycMatrix {
    pub dim: usize,
    entries: Vec<Cyclotomic>,
}

impl CycMatrix {
    pub fn from_entries(dim: usize, entries: Vec<Cyclotomic>) -> Result<CycMatrix> {
        if entries.len() != dim * dim {
            return Err(Error::Invalid(alloc::format!(
                "matrix needs {} entries, got {}",
                dim * dim,
                entries.len()
            )));
        }
        Ok(CycMatrix { dim, entries })
    }

    pub fn identity(dim: usize) -> CycMatrix {
        let mut entries = alloc::vec![Cyclotomic::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Cyclotomic::one();
        }
        CycMatrix { dim, entries }
    }

    pub fn at(&self, r: usize, c: usize) -> &Cyclotomic {
        &self.entries[r * self.dim + c]
    }

    pub fn entries(&self) -> &[Cyclotomic] {
        &self.entries
    }

    pub fn mul(&self, other: &CycMatrix) -> CycMatrix {
        assert_eq!(self.dim, other.dim);
        let d = self.dim;
        let mut entries = alloc::vec![Cyclotomic::zero(); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    entries[i * d + j] = entries[i * d + j].add(&a.mul(b));
                }
            }
        }
        CycMatrix { dim: d, entries }
    }

    pub fn determinant(&self) -> Cyclotomic {
        // cofactor expansion; dimensions here are tiny
        let d = self.dim;
        if d == 0 {
            return Cyclotomic::one();
        }
        if d == 1 {
            return self.at(0, 0).clone();
        }
        let mut det = Cyclotomic::zero();
        for c in 0..d {
            let a = self.at(0, c);
            if a.is_zero() {
                continue;
            }
            let mut minor = Vec::with_capacity((d - 1) * (d - 1));
            for i in 1..d {
                for j in 0..d {
                    if j != c {
                        minor.push(self.at(i, j).clone());
                    }
                }
            }
            let m = CycMatrix {
                dim: d - 1,
                entries: minor,
            };
            let term = a.mul(&m.determinant());
            if c % 2 == 0 {
                det = det.add(&term);
            } else {
                det = det.sub(&term);
            }
        }
        det
    }

    /// Embeds all entries into a common conductor for canonical comparison.
    fn canonical_key(&self, ambient: u32) -> Vec<Vec<Rational>> {
        self.entries
            .iter()
            .map(|e| e.embed(ambient).coeffs().to_vec())
            .collect()
    }
}

/// Rotation of the plane by 2*pi/n, realized exactly in Q(zeta_4n):
/// cos = (z + z^-1)/2 and sin = (z - z^-1)/(2i) for z = zeta_n.
pub fn rotation_2d(n: u32) -> CycMatrix {
    assert!(n >= 1);
    let z = Cyclotomic::root_of_unity(n, 1);
    let zinv = Cyclotomic::root_of_unity(n, -1);
    let half = Rational::new(1.into(), 2.into());
    let c = z.add(&zinv).scale(&half);
    // 1/(2i) = -i/2
    let minus_i_half = Cyclotomic::root_of_unity(4, 1).neg().scale(&half);
    let s = z.sub(&zinv).mul(&minus_i_half);
    CycMatrix::from_entries(
        2,
        alloc::vec![c.clone(), s.neg(), s.clone(), c],
    )
    .unwrap()
}

/// Reflection across the y-axis.
pub fn reflection_2d() -> CycMatrix {
    CycMatrix::from_entries(
        2,
        alloc::vec![
            Cyclotomic::from_integer(-1),
            Cyclotomic::zero(),
            Cyclotomic::zero(),
            Cyclotomic::one(),
        ],
    )
    .unwrap()
}

/// A matrix group given by generators; the closure is computed on demand and
/// bounded by a cap.
#[derive(Clone, Debug)]
pub struct MatGroup {
    dim: usize,
    /// Common conductor containing every entry of every generator.
    ambient: u32,
    gens: Vec<CycMatrix>,
}

impl MatGroup {
    pub fn new(gens: Vec<CycMatrix>) -> Result<MatGroup> {
        let dim = match gens.first() {
            None => {
                return Err(Error::Invalid(alloc::string::String::from(
                    "a matrix group needs at least one generator",
                )))
            }
            Some(g) => g.dim,
        };
        let mut ambient = 1u32;
        for g in &gens {
            if g.dim != dim {
                return Err(Error::Invalid(alloc::string::String::from(
                    "generator dimensions differ",
                )));
            }
            if g.determinant().is_zero() {
                return Err(Error::Invalid(alloc::string::String::from(
                    "generator is not invertible",
                )));
            }
            for e in g.entries() {
                ambient = num_integer::lcm(ambient, e.conductor());
            }
        }
        Ok(MatGroup { dim, ambient, gens })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[CycMatrix] {
        &self.gens
    }

    /// All elements by Dimino's inductive coset algorithm. Exceeding the cap
    /// signals a possibly infinite group.
    pub fn dimino_elements(&self, cap: usize) -> Result<Vec<CycMatrix>> {
        let key = |m: &CycMatrix| m.canonical_key(self.ambient);
        let mut elements: Vec<CycMatrix> = alloc::vec![CycMatrix::identity(self.dim)];
        let mut seen: alloc::collections::BTreeSet<Vec<Vec<Rational>>> =
            alloc::collections::BTreeSet::new();
        seen.insert(key(&elements[0]));

        for i in 0..self.gens.len() {
            let g = &self.gens[i];
            if seen.contains(&key(g)) {
                continue;
            }
            // append the coset <previous> * g, then close over earlier gens
            let prev_order = elements.len();
            let push_coset = |rep: &CycMatrix,
                                  elements: &mut Vec<CycMatrix>,
                                  seen: &mut alloc::collections::BTreeSet<Vec<Vec<Rational>>>|
             -> Result<()> {
                for t in 0..prev_order {
                    let x = elements[t].mul(rep);
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded {
                            what: "matrix group closure",
                            cap: cap as u64,
                        });
                    }
                    let k = key(&x);
                    if seen.insert(k) {
                        elements.push(x);
                    }
                }
                Ok(())
            };
            push_coset(g, &mut elements, &mut seen)?;
            let mut rep_pos = prev_order;
            while rep_pos < elements.len() {
                let rep = elements[rep_pos].clone();
                for s in &self.gens[..=i] {
                    let t = rep.mul(s);
                    if !seen.contains(&key(&t)) {
                        push_coset(&t, &mut elements, &mut seen)?;
                    }
                }
                rep_pos += prev_order;
            }
        }
        Ok(elements)
    }

    /// Orbit of a row vector under right multiplication, breadth-first.
    pub fn vector_orbit(&self, v: &[Cyclotomic], cap: usize) -> Result<Vec<Vec<Cyclotomic>>> {
        if v.len() != self.dim {
            return Err(Error::Invalid(alloc::string::String::from(
                "vector length must match the matrix dimension",
            )));
        }
        let mut ambient = self.ambient;
        for e in v {
            ambient = num_integer::lcm(ambient, e.conductor());
        }
        let key = |w: &[Cyclotomic]| -> Vec<Vec<Rational>> {
            w.iter().map(|e| e.embed(ambient).coeffs().to_vec()).collect()
        };
        let apply = |w: &[Cyclotomic], m: &CycMatrix| -> Vec<Cyclotomic> {
            (0..self.dim)
                .map(|j| {
                    let mut acc = Cyclotomic::zero();
                    for (i, wi) in w.iter().enumerate() {
                        if !wi.is_zero() {
                            acc = acc.add(&wi.mul(m.at(i, j)));
                        }
                    }
                    acc
                })
                .collect()
        };
        let mut out = alloc::vec![v.to_vec()];
        let mut seen = alloc::collections::BTreeSet::new();
        seen.insert(key(v));
        let mut head = 0;
        while head < out.len() {
            let w = out[head].clone();
            head += 1;
            for m in &self.gens {
                let u = apply(&w, m);
                if out.len() >= cap {
                    return Err(Error::CapExceeded {
                        what: "vector orbit",
                        cap: cap as u64,
                    });
                }
                if seen.insert(key(&u)) {
                    out.push(u);
                }
            }
        }
        Ok(out)
    }

    /// The right regular permutation action on the element list sorted by
    /// entry coefficients; an isomorphism onto a permutation group.
    pub fn to_perm_group(&self, cap: usize) -> Result<(PermGroup, Vec<Permutation>)> {
        let mut elements = self.dimino_elements(cap)?;
        let ambient = self.ambient;
        elements.sort_by(|a, b| {
            a.canonical_key(ambient).cmp(&b.canonical_key(ambient))
        });
        let index_of = |m: &CycMatrix| -> usize {
            let k = m.canonical_key(ambient);
            elements
                .binary_search_by(|e| e.canonical_key(ambient).cmp(&k))
                .expect("product stays in the closure")
        };
        let mut gen_perms = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let images: Vec<u32> = elements
                .iter()
                .map(|x| index_of(&x.mul(g)) as u32 + 1)
                .collect();
            gen_perms.push(Permutation::from_images(images)?);
        }
        let group = PermGroup::new(elements.len() as u32, gen_perms.clone())?;
        Ok((group, gen_perms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pentagon_group() -> MatGroup {
        MatGroup::new(alloc::vec![reflection_2d(), rotation_2d(5)]).unwrap()
    }

    #[test]
    fn rotation_orders() {
        let quarter = rotation_2d(4);
        let expected = CycMatrix::from_entries(
            2,
            alloc::vec![
                Cyclotomic::zero(),
                Cyclotomic::from_integer(-1),
                Cyclotomic::one(),
                Cyclotomic::zero(),
            ],
        )
        .unwrap();
        assert_eq!(quarter, expected);

        let r5 = rotation_2d(5);
        let mut acc = CycMatrix::identity(2);
        for _ in 0..5 {
            acc = acc.mul(&r5);
        }
        assert_eq!(acc, CycMatrix::identity(2));
        assert_ne!(r5, CycMatrix::identity(2));

        assert_eq!(rotation_2d(1), CycMatrix::identity(2));
    }

    #[test]
    fn pentagon_closure_has_ten_elements() {
        let g = pentagon_group();
        let elems = g.dimino_elements(100).unwrap();
        assert_eq!(elems.len(), 10);
    }

    #[test]
    fn closure_is_closed_under_product() {
        let g = pentagon_group();
        let elems = g.dimino_elements(100).unwrap();
        let ambient = 20;
        let keys: alloc::collections::BTreeSet<_> = elems
            .iter()
            .map(|m| m.canonical_key(ambient))
            .collect();
        for a in &elems {
            for b in &elems {
                assert!(keys.contains(&a.mul(b).canonical_key(ambient)));
            }
        }
    }

    #[test]
    fn trivial_and_infinite_cases() {
        let t = MatGroup::new(alloc::vec![CycMatrix::identity(2)]).unwrap();
        assert_eq!(t.dimino_elements(10).unwrap().len(), 1);

        let unipotent = CycMatrix::from_entries(
            2,
            alloc::vec![
                Cyclotomic::one(),
                Cyclotomic::one(),
                Cyclotomic::zero(),
                Cyclotomic::one(),
            ],
        )
        .unwrap();
        let g = MatGroup::new(alloc::vec![unipotent]).unwrap();
        assert!(matches!(
            g.dimino_elements(100),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn singular_generator_rejected() {
        let zero = CycMatrix::from_entries(
            2,
            alloc::vec![
                Cyclotomic::zero(),
                Cyclotomic::zero(),
                Cyclotomic::zero(),
                Cyclotomic::zero(),
            ],
        )
        .unwrap();
        assert!(MatGroup::new(alloc::vec![zero]).is_err());
    }

    #[test]
    fn pentagon_vertex_orbit() {
        let g = pentagon_group();
        let v = alloc::vec![Cyclotomic::zero(), Cyclotomic::one()];
        let orbit = g.vector_orbit(&v, 100).unwrap();
        assert_eq!(orbit.len(), 5);
        // pairwise distinct by construction; check against the zero vector too
        let zero = alloc::vec![Cyclotomic::zero(), Cyclotomic::zero()];
        assert_eq!(g.vector_orbit(&zero, 100).unwrap().len(), 1);
    }

    #[test]
    fn minus_identity_orbit() {
        let minus = CycMatrix::from_entries(
            2,
            alloc::vec![
                Cyclotomic::from_integer(-1),
                Cyclotomic::zero(),
                Cyclotomic::zero(),
                Cyclotomic::from_integer(-1),
            ],
        )
        .unwrap();
        let g = MatGroup::new(alloc::vec![minus]).unwrap();
        let v = alloc::vec![Cyclotomic::one(), Cyclotomic::zero()];
        assert_eq!(g.vector_orbit(&v, 10).unwrap().len(), 2);
        let (pg, _) = g.to_perm_group(10).unwrap();
        assert_eq!(pg.order(), 2);
        assert_eq!(pg.degree(), 2);
    }

    #[test]
    fn pentagon_to_perm_group() {
        let g = pentagon_group();
        let (pg, gen_perms) = g.to_perm_group(100).unwrap();
        assert_eq!(pg.order(), 10);
        assert_eq!(pg.degree(), 10);
        assert_eq!(pg.describe(100).unwrap(), "D 10");
        // the map is multiplicative on the generators
        let elems = g.dimino_elements(100).unwrap();
        let _ = elems;
        let prod_mat_perm = gen_perms[0].mul(&gen_perms[1]);
        assert!(pg.contains(&prod_mat_perm).unwrap());
    }

    #[test]
    fn vector_dimension_mismatch() {
        let g = pentagon_group();
        let v = alloc::vec![Cyclotomic::one()];
        assert!(g.vector_orbit(&v, 10).is_err());
    }
}
