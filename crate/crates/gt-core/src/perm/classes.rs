//! Element enumeration and conjugacy classes by direct orbit computation.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{PermGroup, Permutation};
use crate::error::{Error, Result};

/// Breadth-first closure of the generators starting at the identity,
/// applying generators in order. The order is deterministic.
pub fn enumerate_elements(degree: u32, gens: &[Permutation], cap: u64) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: BTreeMap<Vec<u32>, ()> = BTreeMap::new();
    let mut out = Vec::new();
    seen.insert(id.images().to_vec(), ());
    out.push(id);
    let mut head = 0;
    while head < out.len() {
        let current = out[head].clone();
        head += 1;
        for g in gens {
            let next = current.mul(g);
            if !seen.contains_key(next.images()) {
                if out.len() as u64 >= cap {
                    return Err(Error::CapExceeded {
                        what: "element enumeration",
                        cap,
                    });
                }
                seen.insert(next.images().to_vec(), ());
                out.push(next);
            }
        }
    }
    Ok(out)
}

/// A single conjugacy class: representative, members, and bookkeeping.
#[derive(Clone, Debug)]
pub struct ConjClass {
    pub rep: Permutation,
    pub size: u64,
    pub centralizer_order: u64,
    pub element_order: u64,
    pub members: Vec<Permutation>,
}

/// Conjugacy classes ordered by (element order, class size, minimal
/// representative in lexicographic image order); the representative of each
/// class is its lexicographically minimal member.
#[derive(Clone, Debug)]
pub struct ConjClassSet {
    pub classes: Vec<ConjClass>,
    index: BTreeMap<Vec<u32>, usize>,
}

impl ConjClassSet {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p.images()).copied()
    }

    pub fn sizes(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.size).collect()
    }

    pub fn centralizer_orders(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.centralizer_order).collect()
    }

    pub fn element_orders(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.element_order).collect()
    }

    /// Class names like `1a`, `2a`, `2b`: element order plus letters assigned
    /// in class order within each element order.
    pub fn names(&self) -> Vec<alloc::string::String> {
        let mut counters: BTreeMap<u64, u32> = BTreeMap::new();
        self.classes
            .iter()
            .map(|c| {
                let k = counters.entry(c.element_order).or_insert(0);
                let letter = letters(*k);
                *k += 1;
                alloc::format!("{}{}", c.element_order, letter)
            })
            .collect()
    }

    /// Index of the class containing rep^e.
    pub fn power_class(&self, class: usize, e: i64) -> usize {
        let p = self.classes[class].rep.pow(e);
        self.class_of(&p).expect("power of a class representative left the group")
    }
}

fn letters(mut k: u32) -> alloc::string::String {
    let mut s = alloc::string::String::new();
    loop {
        s.insert(0, (b'a' + (k % 26) as u8) as char);
        if k < 26 {
            break;
        }
        k = k / 26 - 1;
    }
    s
}

pub fn conjugacy_classes(g: &PermGroup, cap: u64) -> Result<ConjClassSet> {
    let elements = g.elements(cap)?;
    let mut assigned: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    let mut classes: Vec<ConjClass> = Vec::new();

    for e in elements {
        if assigned.contains_key(e.images()) {
            continue;
        }
        // orbit of e under conjugation by the generators
        let class_id = classes.len();
        let mut members = Vec::new();
        let mut queue = Vec::new();
        assigned.insert(e.images().to_vec(), class_id);
        members.push(e.clone());
        queue.push(e.clone());
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head].clone();
            head += 1;
            for s in g.generators() {
                let y = x.conjugate_by(s);
                if !assigned.contains_key(y.images()) {
                    assigned.insert(y.images().to_vec(), class_id);
                    members.push(y.clone());
                    queue.push(y);
                }
            }
        }
        members.sort();
        let rep = members[0].clone();
        let size = members.len() as u64;
        classes.push(ConjClass {
            element_order: rep.order(),
            centralizer_order: 0,
            rep,
            size,
            members,
        });
    }

    let total: u64 = classes.iter().map(|c| c.size).sum();
    for c in classes.iter_mut() {
        c.centralizer_order = total / c.size;
    }

    // sort by (element order, class size, minimal representative)
    let mut order: Vec<usize> = (0..classes.len()).collect();
    order.sort_by(|&a, &b| {
        let ca = &classes[a];
        let cb = &classes[b];
        (ca.element_order, ca.size, ca.rep.images())
            .cmp(&(cb.element_order, cb.size, cb.rep.images()))
    });
    let mut sorted = Vec::with_capacity(classes.len());
    let mut remap = alloc::vec![0usize; classes.len()];
    for (new_id, &old_id) in order.iter().enumerate() {
        remap[old_id] = new_id;
        sorted.push(classes[old_id].clone());
    }
    let index = assigned
        .into_iter()
        .map(|(k, v)| (k, remap[v]))
        .collect();
    Ok(ConjClassSet {
        classes: sorted,
        index,
    })
}

#[cfg(test)]
mod tests {
    use crate::perm::{parse_cycles, sl2_5, symmetric_group, PermGroup};

    #[test]
    fn d10_has_four_classes() {
        let g = PermGroup::new(
            5,
            alloc::vec![
                parse_cycles("(2,5)(3,4)", 5).unwrap(),
                parse_cycles("(1,3)(4,5)", 5).unwrap(),
            ],
        )
        .unwrap();
        let cc = g.conjugacy_classes(1000).unwrap();
        // table order is (element order, class size, minimal representative)
        assert_eq!(cc.sizes(), alloc::vec![1, 5, 2, 2]);
        assert_eq!(cc.names(), alloc::vec!["1a", "2a", "5a", "5b"]);
        let mut sorted = cc.sizes();
        sorted.sort_unstable();
        assert_eq!(sorted, alloc::vec![1, 2, 2, 5]);
    }

    #[test]
    fn trivial_group_single_class() {
        let g = PermGroup::trivial(2);
        let cc = g.conjugacy_classes(10).unwrap();
        assert_eq!(cc.count(), 1);
        assert_eq!(cc.names(), alloc::vec!["1a"]);
    }

    #[test]
    fn sl25_class_statistics() {
        let g = sl2_5();
        let cc = g.conjugacy_classes(1000).unwrap();
        assert_eq!(cc.count(), 9);
        let mut cents = cc.centralizer_orders();
        cents.sort_unstable();
        assert_eq!(cents, alloc::vec![4, 6, 6, 10, 10, 10, 10, 120, 120]);
    }

    #[test]
    fn class_sizes_multiply_to_group_order() {
        let g = symmetric_group(4);
        let cc = g.conjugacy_classes(1000).unwrap();
        for c in &cc.classes {
            assert_eq!(c.size * c.centralizer_order, 24);
        }
        assert_eq!(cc.names(), alloc::vec!["1a", "2a", "2b", "3a", "4a"]);
        // smaller class first within an element order: 2a is the 3 double
        // transpositions, 2b the 6 transpositions
        assert_eq!(cc.classes[1].size, 3);
        assert_eq!(cc.classes[2].size, 6);
    }

    #[test]
    fn power_map_is_consistent() {
        let g = sl2_5();
        let cc = g.conjugacy_classes(1000).unwrap();
        for (i, c) in cc.classes.iter().enumerate() {
            let sq = cc.power_class(i, 2);
            for m in &c.members {
                assert_eq!(cc.class_of(&m.pow(2)).unwrap(), sq);
            }
        }
    }
}
