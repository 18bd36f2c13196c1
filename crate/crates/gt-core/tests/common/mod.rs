//! Shared corpus groups and independent brute-force oracles. The oracles
//! never touch stabilizer chains, coset tables, or the tails machinery: they
//! enumerate.

#![allow(dead_code)] // each test binary uses its own selection

use std::collections::{BTreeMap, BTreeSet};

use gt_core::perm::{
    alternating_group, cyclic_group, dihedral_group, parse_cycles, quaternion_group, sl2_5,
    symmetric_group, PermGroup, Permutation,
};

pub fn corpus() -> Vec<(&'static str, PermGroup)> {
    vec![
        ("trivial", PermGroup::trivial(1)),
        ("C2", cyclic_group(2)),
        ("C6", cyclic_group(6)),
        ("V4", dihedral_group(4).unwrap()),
        ("S3", symmetric_group(3)),
        ("D8", dihedral_group(8).unwrap()),
        ("D10", dihedral_group(10).unwrap()),
        ("Q8", quaternion_group()),
        ("A4", alternating_group(4)),
        ("C2xC2xC2", elementary_eight()),
        ("S4", symmetric_group(4)),
        ("A5", alternating_group(5)),
        ("SL25", sl2_5()),
    ]
}

fn elementary_eight() -> PermGroup {
    PermGroup::new(
        6,
        vec![
            parse_cycles("(1,2)", 6).unwrap(),
            parse_cycles("(3,4)", 6).unwrap(),
            parse_cycles("(5,6)", 6).unwrap(),
        ],
    )
    .unwrap()
}

/// Plain breadth-first closure; independent of stabilizer chains.
pub fn brute_force_elements(g: &PermGroup) -> Vec<Permutation> {
    let id = Permutation::identity(g.degree());
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    seen.insert(id.images().to_vec());
    let mut out = vec![id];
    let mut head = 0;
    while head < out.len() {
        let x = out[head].clone();
        head += 1;
        for s in g.generators() {
            let y = x.mul(s);
            if seen.insert(y.images().to_vec()) {
                out.push(y);
            }
        }
    }
    out
}

/// Conjugacy partition by the orbit of conjugation over all elements.
pub fn brute_force_classes(g: &PermGroup) -> Vec<BTreeSet<Vec<u32>>> {
    let elements = brute_force_elements(g);
    let mut assigned: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let mut classes: Vec<BTreeSet<Vec<u32>>> = Vec::new();
    for x in &elements {
        if assigned.contains_key(x.images()) {
            continue;
        }
        let id = classes.len();
        let mut class = BTreeSet::new();
        for t in &elements {
            let y = x.conjugate_by(t);
            assigned.insert(y.images().to_vec(), id);
            class.insert(y.images().to_vec());
        }
        classes.push(class);
    }
    classes
}

/// Every subgroup as an element set, by closing subsets generated from
/// cyclic subgroups under joins.
pub fn brute_force_subgroups(g: &PermGroup) -> BTreeSet<BTreeSet<Vec<u32>>> {
    let elements = brute_force_elements(g);
    let degree = g.degree();
    let closure = |gens: &[Permutation]| -> BTreeSet<Vec<u32>> {
        let id = Permutation::identity(degree);
        let mut set = BTreeSet::new();
        set.insert(id.images().to_vec());
        let mut queue = vec![id];
        while let Some(x) = queue.pop() {
            for s in gens {
                let y = x.mul(s);
                if set.insert(y.images().to_vec()) {
                    queue.push(y);
                }
            }
        }
        set
    };
    let mut all: BTreeMap<BTreeSet<Vec<u32>>, Vec<Permutation>> = BTreeMap::new();
    all.insert(closure(&[]), Vec::new());
    for e in &elements {
        all.entry(closure(std::slice::from_ref(e)))
            .or_insert_with(|| vec![e.clone()]);
    }
    loop {
        let snapshot: Vec<(BTreeSet<Vec<u32>>, Vec<Permutation>)> =
            all.iter().map(|(s, g)| (s.clone(), g.clone())).collect();
        let before = all.len();
        for (i, (sa, ga)) in snapshot.iter().enumerate() {
            for (sb, gb) in snapshot.iter().skip(i + 1) {
                if sa.is_subset(sb) || sb.is_subset(sa) {
                    continue;
                }
                let mut gens = ga.clone();
                gens.extend(gb.iter().cloned());
                all.entry(closure(&gens)).or_insert(gens);
            }
        }
        if all.len() == before {
            break;
        }
    }
    all.into_keys().collect()
}

/// Splitmix-style deterministic word sampler for membership properties.
pub struct WordSampler {
    state: u64,
}

impl WordSampler {
    pub fn new(seed: u64) -> Self {
        WordSampler { state: seed }
    }

    pub fn next(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn random_word_element(&mut self, g: &PermGroup, max_len: usize) -> Permutation {
        let mut acc = Permutation::identity(g.degree());
        if g.generators().is_empty() {
            return acc;
        }
        let len = (self.next() as usize % max_len) + 1;
        for _ in 0..len {
            let pick = self.next() as usize % g.generators().len();
            let inv = self.next() % 2 == 0;
            let s = &g.generators()[pick];
            acc = acc.mul(&if inv { s.inverse() } else { s.clone() });
        }
        acc
    }
}
