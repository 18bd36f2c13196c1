//! G-sets: orbits, stabilizers, coset actions, action homomorphisms,
//! primitivity, and the minimal-degree faithful transitive representation.
//!
//! A `GSet` bundles the acting group, seed points, and the action function;
//! the enumerated domain is cached. The action is from the right, and every
//! constructor wires the axioms `x.1 = x` and `(x.g).h = x.(g h)` into a
//! spot check that tests exercise.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

type ActionFn<P> = Arc<dyn Fn(&P, &Permutation) -> P + Send + Sync>;

pub struct GSet<P> {
    group: PermGroup,
    seeds: Vec<P>,
    action: ActionFn<P>,
    domain: OnceBox<Vec<P>>,
}

impl<P: Ord + Clone + Send + Sync + 'static> GSet<P> {
    pub fn from_action(
        group: PermGroup,
        seeds: Vec<P>,
        action: impl Fn(&P, &Permutation) -> P + Send + Sync + 'static,
    ) -> GSet<P> {
        GSet {
            group,
            seeds,
            action: Arc::new(action),
            domain: OnceBox::new(),
        }
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn apply(&self, x: &P, g: &Permutation) -> P {
        (self.action)(x, g)
    }

    /// The enumerated domain: closure of the seeds under the generators,
    /// seeds first, then breadth-first discovery order.
    pub fn domain(&self) -> &[P] {
        self.domain.get_or_init(|| {
            let mut out: Vec<P> = Vec::new();
            let mut seen: BTreeMap<P, ()> = BTreeMap::new();
            for s in &self.seeds {
                if seen.insert(s.clone(), ()).is_none() {
                    out.push(s.clone());
                }
            }
            let mut head = 0;
            while head < out.len() {
                let x = out[head].clone();
                head += 1;
                for g in self.group.generators() {
                    let y = (self.action)(&x, g);
                    if seen.insert(y.clone(), ()).is_none() {
                        out.push(y);
                    }
                }
            }
            Box::new(out)
        })
    }

    /// Orbit of a point in breadth-first order, applying generators in order.
    pub fn orbit(&self, x: &P) -> Vec<P> {
        let mut out = alloc::vec![x.clone()];
        let mut seen: BTreeMap<P, ()> = BTreeMap::new();
        seen.insert(x.clone(), ());
        let mut head = 0;
        while head < out.len() {
            let y = out[head].clone();
            head += 1;
            for g in self.group.generators() {
                let z = (self.action)(&y, g);
                if seen.insert(z.clone(), ()).is_none() {
                    out.push(z);
                }
            }
        }
        out
    }

    /// Checks the action axioms on every domain point with all generator
    /// pairs; diagnostic for user-supplied action functions.
    pub fn verify_axioms(&self) -> Result<()> {
        let id = Permutation::identity(self.group.degree());
        for x in self.domain() {
            if (self.action)(x, &id) != *x {
                return Err(Error::Invalid(alloc::string::String::from(
                    "action violates x.1 = x",
                )));
            }
            for g in self.group.generators() {
                for h in self.group.generators() {
                    let gh = g.mul(h);
                    let lhs = (self.action)(&(self.action)(x, g), h);
                    let rhs = (self.action)(x, &gh);
                    if lhs != rhs {
                        return Err(Error::Invalid(alloc::string::String::from(
                            "action violates (x.g).h = x.(gh)",
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The permutation action of the group on the indexed domain.
    pub fn action_homomorphism(&self, cap: u64) -> Result<ActionHom> {
        let domain = self.domain();
        if domain.len() as u64 > cap {
            return Err(Error::CapExceeded {
                what: "action domain enumeration",
                cap,
            });
        }
        let index: BTreeMap<&P, u32> = domain
            .iter()
            .enumerate()
            .map(|(i, p)| (p, i as u32 + 1))
            .collect();
        let mut images = Vec::with_capacity(self.group.generators().len());
        for g in self.group.generators() {
            let mut img = Vec::with_capacity(domain.len());
            for x in domain {
                let y = (self.action)(x, g);
                let iy = index.get(&y).copied().ok_or_else(|| {
                    Error::Invalid(alloc::string::String::from(
                        "action leaves the enumerated domain",
                    ))
                })?;
                img.push(iy);
            }
            images.push(Permutation::from_images(img)?);
        }
        Ok(ActionHom {
            source: self.group.clone(),
            images,
            degree: domain.len() as u32,
        })
    }

    /// Stabilizer of a point via Schreier generators of the orbit.
    pub fn stabilizer(&self, x: &P) -> PermGroup {
        let mut orbit = alloc::vec![x.clone()];
        let mut transversal: BTreeMap<P, Permutation> = BTreeMap::new();
        transversal.insert(x.clone(), Permutation::identity(self.group.degree()));
        let mut head = 0;
        let mut stab_gens: Vec<Permutation> = Vec::new();
        while head < orbit.len() {
            let y = orbit[head].clone();
            head += 1;
            let uy = transversal.get(&y).unwrap().clone();
            for g in self.group.generators() {
                let z = (self.action)(&y, g);
                match transversal.get(&z) {
                    None => {
                        transversal.insert(z.clone(), uy.mul(g));
                        orbit.push(z);
                    }
                    Some(uz) => {
                        let schreier = uy.mul(g).mul(&uz.inverse());
                        if !schreier.is_identity() && !stab_gens.contains(&schreier) {
                            stab_gens.push(schreier);
                        }
                    }
                }
            }
        }
        PermGroup::new_unchecked(self.group.degree(), stab_gens)
    }
}

/// Natural G-set of a permutation group on its domain {1..degree}.
pub fn natural_gset(group: &PermGroup) -> GSet<u32> {
    let seeds: Vec<u32> = (1..=group.degree()).collect();
    GSet::from_action(group.clone(), seeds, |x, g| g.apply(*x))
}

/// Orbits of the natural action, each in BFS order, scanning start points
/// in ascending order.
pub fn natural_orbits(group: &PermGroup) -> Vec<Vec<u32>> {
    let gs = natural_gset(group);
    let mut seen = alloc::vec![false; group.degree() as usize];
    let mut out = Vec::new();
    for x in 1..=group.degree() {
        if seen[(x - 1) as usize] {
            continue;
        }
        let orbit = gs.orbit(&x);
        for &y in &orbit {
            seen[(y - 1) as usize] = true;
        }
        out.push(orbit);
    }
    out
}

/// The G-set of right cosets Ug; points are canonical coset keys, namely the
/// lexicographically minimal member of the coset. The identity coset is the
/// first seed.
pub fn right_cosets(group: &PermGroup, subgroup: &PermGroup, cap: u64) -> Result<GSet<Vec<u32>>> {
    if !group.is_subgroup(subgroup)? {
        return Err(Error::NotASubgroup);
    }
    let u_elems: Arc<Vec<Permutation>> = Arc::new(subgroup.elements(cap)?.to_vec());
    let key = {
        let u_elems = Arc::clone(&u_elems);
        move |p: &Permutation| -> Vec<u32> {
            u_elems
                .iter()
                .map(|u| u.mul(p).images().to_vec())
                .min()
                .unwrap()
        }
    };
    let identity_key = key(&Permutation::identity(group.degree()));
    let action_key = key;
    let gs = GSet::from_action(
        group.clone(),
        alloc::vec![identity_key],
        move |coset: &Vec<u32>, g: &Permutation| {
            let rep = Permutation::from_images(coset.clone()).expect("coset key is a permutation");
            action_key(&rep.mul(g))
        },
    );
    Ok(gs)
}

/// G acting componentwise on tuples of points.
pub fn on_tuples(group: &PermGroup, seeds: Vec<Vec<u32>>) -> GSet<Vec<u32>> {
    GSet::from_action(group.clone(), seeds, |t: &Vec<u32>, g: &Permutation| {
        t.iter().map(|&x| g.apply(x)).collect()
    })
}

/// An action homomorphism: images of the source generators as permutations
/// of the indexed domain.
#[derive(Clone, Debug)]
pub struct ActionHom {
    pub source: PermGroup,
    pub images: Vec<Permutation>,
    pub degree: u32,
}

impl ActionHom {
    pub fn image_group(&self) -> PermGroup {
        PermGroup::new_unchecked(self.degree, self.images.clone())
    }

    pub fn kernel_order(&self) -> u128 {
        self.source.order() / self.image_group().order()
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel_order() == 1
    }
}

/// Block-system test for a transitive group on its natural domain. Returns
/// the trivial answer `(true, None)` or `(false, blocks)` with a minimal
/// nontrivial block system containing the pair (1, x) for the smallest
/// usable x.
pub fn is_primitive(group: &PermGroup) -> Result<(bool, Option<Vec<Vec<u32>>>)> {
    let n = group.degree();
    let orbits = natural_orbits(group);
    if orbits.len() != 1 || orbits[0].len() != n as usize {
        return Err(Error::NotTransitive);
    }
    if n == 1 {
        return Ok((true, None));
    }
    for x in 2..=n {
        // union-find closure of the seed pair (1, x)
        let mut parent: Vec<u32> = (0..n).collect();
        fn find(parent: &mut Vec<u32>, mut a: u32) -> u32 {
            while parent[a as usize] != a {
                let up = parent[parent[a as usize] as usize];
                parent[a as usize] = up;
                a = up;
            }
            a
        }
        let mut queue: Vec<(u32, u32)> = alloc::vec![(0, x - 1)];
        let ra = find(&mut parent, 0);
        parent[ra as usize] = find(&mut parent, x - 1);
        while let Some((a, b)) = queue.pop() {
            for g in group.generators() {
                let ga = g.apply(a + 1) - 1;
                let gb = g.apply(b + 1) - 1;
                let ra = find(&mut parent, ga);
                let rb = find(&mut parent, gb);
                if ra != rb {
                    parent[ra as usize] = rb;
                    queue.push((ga, gb));
                }
            }
        }
        let mut blocks: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for p in 0..n {
            let r = find(&mut parent, p);
            blocks.entry(r).or_default().push(p + 1);
        }
        // the closure is G-invariant; nontrivial iff strictly between the
        // discrete and the one-block partition
        if blocks.len() > 1 && blocks.len() < n as usize {
            let mut out: Vec<Vec<u32>> = blocks.into_values().collect();
            out.sort();
            return Ok((false, Some(out)));
        }
    }
    Ok((true, None))
}

/// A faithful transitive permutation representation of minimal degree among
/// the coset actions on subgroup classes, with the shortcut for natural
/// symmetric and alternating groups.
pub fn optimal_perm_rep(group: &PermGroup, order_cap: u64) -> Result<ActionHom> {
    let n = group.degree() as u64;
    let order = group.order();
    // shortcut: the natural symmetric or alternating group cannot do better
    let transitive = natural_orbits(group).len() == 1;
    if transitive {
        let fact: Option<u128> = (2..=n as u128).try_fold(1u128, |a, b| a.checked_mul(b));
        if let Some(fact) = fact {
            let is_sym = order == fact;
            let is_alt =
                n >= 3 && order * 2 == fact && group.generators().iter().all(|p| p.is_even());
            if is_sym || is_alt {
                return Ok(ActionHom {
                    source: group.clone(),
                    images: group.generators().to_vec(),
                    degree: group.degree(),
                });
            }
        }
    }
    let mut classes = group.subgroup_classes(order_cap)?;
    // ascending index = descending order; stable to keep class order on ties
    classes.sort_by_key(|c| order / c.order as u128);
    for class in &classes {
        let gs = right_cosets(group, &class.rep, order_cap)?;
        let hom = gs.action_homomorphism(order_cap)?;
        if hom.is_faithful() {
            return Ok(hom);
        }
    }
    Err(Error::Internal(alloc::string::String::from(
        "no faithful coset action found; the trivial subgroup should always work",
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{
        dihedral_group, parse_cycles, quaternion_group, symmetric_group, PermGroup,
    };

    fn d10() -> PermGroup {
        dihedral_group(10).unwrap()
    }

    #[test]
    fn natural_orbit_examples() {
        let s4 = symmetric_group(4);
        let gs = natural_gset(&s4);
        let mut orb = gs.orbit(&1);
        orb.sort_unstable();
        assert_eq!(orb, alloc::vec![1, 2, 3, 4]);

        let orb1 = natural_gset(&d10()).orbit(&1);
        assert_eq!(orb1.len(), 5);

        let g = PermGroup::new(4, alloc::vec![parse_cycles("(1,2)", 4).unwrap()]).unwrap();
        assert_eq!(natural_gset(&g).orbit(&3), alloc::vec![3]);
        assert_eq!(natural_orbits(&g).len(), 3);
    }

    #[test]
    fn axioms_hold_for_natural_actions() {
        natural_gset(&symmetric_group(4)).verify_axioms().unwrap();
        natural_gset(&d10()).verify_axioms().unwrap();
    }

    #[test]
    fn bad_action_is_detected() {
        // applying g twice is not an action when generators do not commute
        let g = symmetric_group(3);
        let gs = GSet::from_action(g, alloc::vec![1u32, 2, 3], |x, p| p.apply(p.apply(*x)));
        assert!(gs.verify_axioms().is_err());
    }

    #[test]
    fn coset_actions() {
        let s3 = symmetric_group(3);
        let u = PermGroup::new(3, alloc::vec![parse_cycles("(1,2)", 3).unwrap()]).unwrap();
        let gs = right_cosets(&s3, &u, 100).unwrap();
        assert_eq!(gs.domain().len(), 3);
        gs.verify_axioms().unwrap();
        let hom = gs.action_homomorphism(100).unwrap();
        assert_eq!(hom.image_group().order(), 6);
        assert!(hom.is_faithful());

        // cosets of the whole group: a single point
        let gs = right_cosets(&s3, &s3, 100).unwrap();
        assert_eq!(gs.domain().len(), 1);
        let hom = gs.action_homomorphism(100).unwrap();
        assert_eq!(hom.image_group().order(), 1);

        // regular action
        let gs = right_cosets(&s3, &PermGroup::trivial(3), 100).unwrap();
        assert_eq!(gs.domain().len(), 6);

        // non-subgroup rejected
        let v = PermGroup::new(3, alloc::vec![parse_cycles("(1,2,3)", 3).unwrap()]).unwrap();
        let w = PermGroup::new(3, alloc::vec![parse_cycles("(1,2)", 3).unwrap()]).unwrap();
        assert!(matches!(right_cosets(&v, &w, 100), Err(Error::NotASubgroup)));
    }

    #[test]
    fn d8_center_coset_action() {
        let d8 = dihedral_group(8).unwrap();
        let center = PermGroup::new(4, alloc::vec![parse_cycles("(1,3)(2,4)", 4).unwrap()]).unwrap();
        let gs = right_cosets(&d8, &center, 100).unwrap();
        let hom = gs.action_homomorphism(100).unwrap();
        assert_eq!(hom.image_group().order(), 4);
        assert_eq!(hom.kernel_order(), 2);
    }

    #[test]
    fn stabilizers() {
        let s4 = symmetric_group(4);
        let gs = natural_gset(&s4);
        assert_eq!(gs.stabilizer(&1).order(), 6);

        let d = d10();
        let gs = natural_gset(&d);
        let stab = gs.stabilizer(&1);
        assert_eq!(stab.order(), 2);
        // the stabilizer of vertex 1 is the reflection sigma_1 = (2,5)(3,4)
        assert!(stab.contains(&parse_cycles("(2,5)(3,4)", 5).unwrap()).unwrap());

        // regular action has trivial stabilizers
        let gs = right_cosets(&d, &PermGroup::trivial(5), 100).unwrap();
        let x = gs.domain()[2].clone();
        assert_eq!(gs.stabilizer(&x).order(), 1);
    }

    #[test]
    fn orbit_stabilizer_identity() {
        let d = d10();
        let gs = natural_gset(&d);
        for x in 1..=5u32 {
            let orbit = gs.orbit(&x);
            let stab = gs.stabilizer(&x);
            assert_eq!(orbit.len() as u128 * stab.order(), d.order());
        }
    }

    #[test]
    fn primitivity() {
        let (p, w) = is_primitive(&symmetric_group(4)).unwrap();
        assert!(p);
        assert!(w.is_none());

        let d8 = dihedral_group(8).unwrap();
        let (p, w) = is_primitive(&d8).unwrap();
        assert!(!p);
        assert_eq!(w.unwrap(), alloc::vec![alloc::vec![1, 3], alloc::vec![2, 4]]);

        let c2 = PermGroup::new(2, alloc::vec![parse_cycles("(1,2)", 2).unwrap()]).unwrap();
        let (p, _) = is_primitive(&c2).unwrap();
        assert!(p);

        let intrans = PermGroup::new(4, alloc::vec![parse_cycles("(1,2)", 4).unwrap()]).unwrap();
        assert!(matches!(is_primitive(&intrans), Err(Error::NotTransitive)));
    }

    #[test]
    fn optimal_representations() {
        let hom = optimal_perm_rep(&d10(), 2000).unwrap();
        assert_eq!(hom.degree, 5);
        assert!(hom.is_faithful());

        let hom = optimal_perm_rep(&quaternion_group(), 2000).unwrap();
        assert_eq!(hom.degree, 8);

        // natural S4 takes the shortcut
        let hom = optimal_perm_rep(&symmetric_group(4), 2000).unwrap();
        assert_eq!(hom.degree, 4);
        assert_eq!(hom.images, symmetric_group(4).generators().to_vec());
    }

    #[test]
    fn tuple_actions() {
        let s3 = symmetric_group(3);
        let gs = on_tuples(&s3, alloc::vec![alloc::vec![1, 2]]);
        assert_eq!(gs.domain().len(), 6);
        gs.verify_axioms().unwrap();
    }
}

/// The minimal-degree search for a pc-group, through its regular action.
pub fn optimal_perm_rep_pc(
    group: &crate::pcgrp::PcGroup,
    order_cap: u64,
) -> Result<ActionHom> {
    let perm = group.presentation().regular_perm_group()?;
    optimal_perm_rep(&perm, order_cap)
}
