//! Derived series, cores, and brute-force subgroup classification.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::{PermGroup, Permutation};
use crate::error::{Error, Result};

/// Normal closure of <seeds> in g, by the standard closure process on
/// generators and conjugates.
pub fn normal_closure(g: &PermGroup, seeds: &[Permutation]) -> PermGroup {
    let degree = g.degree();
    let mut gens: Vec<Permutation> = Vec::new();
    let mut queue: Vec<Permutation> = seeds.iter().filter(|s| !s.is_identity()).cloned().collect();
    let mut group = PermGroup::trivial(degree);
    while let Some(x) = queue.pop() {
        if group.contains(&x).unwrap_or(false) {
            continue;
        }
        gens.push(x.clone());
        group = PermGroup::new_unchecked(degree, gens.clone());
        for s in g.generators() {
            queue.push(x.conjugate_by(s));
        }
    }
    group
}

pub fn derived_subgroup(g: &PermGroup) -> PermGroup {
    let mut comms = Vec::new();
    for (i, a) in g.generators().iter().enumerate() {
        for b in &g.generators()[i..] {
            let c = a.commutator(b);
            if !c.is_identity() {
                comms.push(c);
            }
        }
    }
    normal_closure(g, &comms)
}

pub fn derived_series(g: &PermGroup) -> Vec<PermGroup> {
    let mut series = alloc::vec![g.clone()];
    loop {
        let last = series.last().unwrap();
        let next = derived_subgroup(last);
        if next.order() == last.order() {
            break;
        }
        let stop = next.is_trivial();
        series.push(next);
        if stop {
            break;
        }
    }
    series
}

/// Largest normal subgroup of g contained in u: the intersection of the
/// conjugates of u over g.
pub fn core(g: &PermGroup, u: &PermGroup, cap: u64) -> Result<PermGroup> {
    if !g.is_subgroup(u)? {
        return Err(Error::NotASubgroup);
    }
    let u_elems: BTreeSet<Vec<u32>> = u
        .elements(cap)?
        .iter()
        .map(|p| p.images().to_vec())
        .collect();
    let mut core_set = u_elems.clone();
    for t in g.elements(cap)? {
        if core_set.len() == 1 {
            break;
        }
        let conj: BTreeSet<Vec<u32>> = u_elems
            .iter()
            .map(|im| {
                Permutation::from_images(im.clone())
                    .unwrap()
                    .conjugate_by(t)
                    .images()
                    .to_vec()
            })
            .collect();
        core_set = core_set.intersection(&conj).cloned().collect();
    }
    let gens: Vec<Permutation> = core_set
        .into_iter()
        .map(|im| Permutation::from_images(im).unwrap())
        .filter(|p| !p.is_identity())
        .collect();
    PermGroup::new(g.degree(), gens)
}

/// A conjugacy class of subgroups: one representative plus class data.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    pub rep: PermGroup,
    pub order: u64,
    /// Number of conjugates of the representative.
    pub class_size: u64,
}

type ElemSet = BTreeSet<Vec<u32>>;

fn closure(degree: u32, gens: &[Permutation]) -> ElemSet {
    let mut set: ElemSet = BTreeSet::new();
    let id = Permutation::identity(degree);
    set.insert(id.images().to_vec());
    let mut queue = alloc::vec![id];
    while let Some(x) = queue.pop() {
        for s in gens {
            let y = x.mul(s);
            if set.insert(y.images().to_vec()) {
                queue.push(y);
            }
        }
    }
    set
}

/// All subgroups up to conjugacy, by brute force: close the set of cyclic
/// subgroups under pairwise join (keyed by element set), then fuse the
/// resulting subgroups under conjugation. Guarded by a cap on |G|.
pub fn subgroup_classes(g: &PermGroup, order_cap: u64) -> Result<Vec<SubgroupClass>> {
    let order = g.order();
    if order > order_cap as u128 {
        return Err(Error::CapExceeded {
            what: "subgroup enumeration",
            cap: order_cap,
        });
    }
    let elements = g.elements(order_cap)?;
    let degree = g.degree();

    // cyclic subgroups, each remembered with a small generating set
    let mut all: BTreeMap<ElemSet, Vec<Permutation>> = BTreeMap::new();
    all.insert(closure(degree, &[]), Vec::new());
    for e in elements {
        if e.is_identity() {
            continue;
        }
        all.entry(closure(degree, core::slice::from_ref(e)))
            .or_insert_with(|| alloc::vec![e.clone()]);
    }

    // close under pairwise join
    loop {
        let snapshot: Vec<(ElemSet, Vec<Permutation>)> =
            all.iter().map(|(s, g)| (s.clone(), g.clone())).collect();
        let before = all.len();
        for (i, (sa, ga)) in snapshot.iter().enumerate() {
            for (sb, gb) in snapshot.iter().skip(i + 1) {
                if sa.is_subset(sb) || sb.is_subset(sa) {
                    continue;
                }
                let mut gens = ga.clone();
                gens.extend(gb.iter().cloned());
                let joined = closure(degree, &gens);
                all.entry(joined).or_insert(gens);
            }
        }
        if all.len() == before {
            break;
        }
    }

    // fuse under conjugation
    let mut remaining: BTreeMap<ElemSet, Vec<Permutation>> = all;
    let mut out = Vec::new();
    while let Some((first, first_gens)) = remaining.iter().next().map(|(s, g)| (s.clone(), g.clone())) {
        let mut orbit: BTreeSet<ElemSet> = BTreeSet::new();
        let mut queue = alloc::vec![first.clone()];
        orbit.insert(first.clone());
        while let Some(set) = queue.pop() {
            for t in g.generators() {
                let conj: ElemSet = set
                    .iter()
                    .map(|im| {
                        Permutation::from_images(im.clone())
                            .unwrap()
                            .conjugate_by(t)
                            .images()
                            .to_vec()
                    })
                    .collect();
                if orbit.insert(conj.clone()) {
                    queue.push(conj);
                }
            }
        }
        let class_size = orbit.len() as u64;
        for s in &orbit {
            remaining.remove(s);
        }
        let rep = PermGroup::new(degree, first_gens)?;
        out.push(SubgroupClass {
            order: first.len() as u64,
            class_size,
            rep,
        });
    }
    out.sort_by(|a, b| a.order.cmp(&b.order));
    Ok(out)
}
