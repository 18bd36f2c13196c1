//! Todd-Coxeter coset enumeration, HLT strategy with coincidence handling.

use alloc::vec::Vec;

use super::{FpPresentation, Word};
use crate::error::{Error, Result};

const UNDEF: usize = usize::MAX;

/// A complete coset table: for every live coset and every generator column
/// (generator and inverse interleaved) the image coset is defined, all
/// relators trace to closed cycles, and coset 0 is the subgroup itself.
#[derive(Clone, Debug)]
pub struct CosetTable {
    pub ngens: usize,
    pub count: usize,
    /// count rows, 2*ngens columns; column 2i is generator i, 2i+1 its inverse.
    table: Vec<Vec<usize>>,
}

impl CosetTable {
    pub fn entry(&self, coset: usize, gen: usize, inverse: bool) -> usize {
        self.table[coset][2 * gen + usize::from(inverse)]
    }

    /// Image of a coset under a word.
    pub fn trace(&self, mut coset: usize, word: &Word) -> usize {
        for &(i, e) in word.letters() {
            let col = 2 * i + usize::from(e < 0);
            for _ in 0..e.unsigned_abs() {
                coset = self.table[coset][col];
            }
        }
        coset
    }

    /// The permutation induced by a generator on the cosets (1-based points).
    pub fn generator_permutation(&self, gen: usize) -> crate::perm::Permutation {
        let images: Vec<u32> = (0..self.count)
            .map(|c| self.table[c][2 * gen] as u32 + 1)
            .collect();
        crate::perm::Permutation::from_images(images).expect("complete table column is a bijection")
    }
}

struct Enumerator<'a> {
    pres: &'a FpPresentation,
    limit: usize,
    table: Vec<Vec<usize>>,
    /// union-find over cosets
    parent: Vec<usize>,
    live: usize,
    defined: usize,
    queue: Vec<(usize, usize)>,
}

impl<'a> Enumerator<'a> {
    fn new(pres: &'a FpPresentation, limit: usize) -> Self {
        let mut e = Enumerator {
            pres,
            limit,
            table: Vec::new(),
            parent: Vec::new(),
            live: 0,
            defined: 0,
            queue: Vec::new(),
        };
        e.define();
        e
    }

    fn cols(&self) -> usize {
        2 * self.pres.generator_count()
    }

    fn define(&mut self) -> usize {
        let id = self.table.len();
        self.table.push(alloc::vec![UNDEF; self.cols()]);
        self.parent.push(id);
        self.live += 1;
        self.defined += 1;
        id
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            let up = self.parent[self.parent[a]];
            self.parent[a] = up;
            a = up;
        }
        a
    }

    fn is_live(&mut self, a: usize) -> bool {
        self.find(a) == a
    }

    fn inv_col(col: usize) -> usize {
        col ^ 1
    }

    /// Sets a table entry in both directions, enqueueing a coincidence on
    /// conflict.
    fn deduce(&mut self, a: usize, col: usize, b: usize) {
        let a = self.find(a);
        let b = self.find(b);
        let cur = self.table[a][col];
        if cur != UNDEF {
            let cur = self.find(cur);
            if cur != b {
                self.queue.push((cur, b));
            }
        } else {
            self.table[a][col] = b;
        }
        let icol = Self::inv_col(col);
        let cur = self.table[b][icol];
        if cur != UNDEF {
            let cur = self.find(cur);
            if cur != a {
                self.queue.push((cur, a));
            }
        } else {
            self.table[b][icol] = a;
        }
    }

    fn process_coincidences(&mut self) {
        while let Some((x, y)) = self.queue.pop() {
            let a = self.find(x);
            let b = self.find(y);
            if a == b {
                continue;
            }
            let (keep, drop) = if a < b { (a, b) } else { (b, a) };
            self.parent[drop] = keep;
            self.live -= 1;
            for col in 0..self.cols() {
                let target = self.table[drop][col];
                if target == UNDEF {
                    continue;
                }
                let target = self.find(target);
                self.deduce(keep, col, target);
            }
        }
    }

    /// Scans a word from the given coset, filling gaps by defining cosets.
    fn scan_and_fill(&mut self, start: usize, cols: &[usize]) -> Result<()> {
        let mut alpha = self.find(start);
        for (t, &col) in cols.iter().enumerate() {
            alpha = self.find(alpha);
            if !self.is_live(start) {
                return Ok(());
            }
            let next = self.table[alpha][col];
            if next != UNDEF {
                alpha = self.find(next);
                continue;
            }
            if t == cols.len() - 1 {
                // close the cycle back to the start
                let s = self.find(start);
                self.deduce(alpha, col, s);
                self.process_coincidences();
                return Ok(());
            }
            if self.defined >= self.limit {
                return Err(Error::CapExceeded {
                    what: "coset enumeration",
                    cap: self.limit as u64,
                });
            }
            let fresh = self.define();
            self.deduce(alpha, col, fresh);
            self.process_coincidences();
            alpha = self.find(alpha);
            let next = self.table[alpha][col];
            if next == UNDEF {
                // the fresh coset may have merged away; rescan this letter
                let restart = self.find(start);
                return self.scan_and_fill(restart, cols);
            }
            alpha = self.find(next);
        }
        let s = self.find(start);
        let alpha = self.find(alpha);
        if alpha != s {
            self.queue.push((alpha, s));
            self.process_coincidences();
        }
        Ok(())
    }

    fn word_cols(word: &Word) -> Vec<usize> {
        let mut cols = Vec::with_capacity(word.length());
        for &(i, e) in word.letters() {
            let col = 2 * i + usize::from(e < 0);
            for _ in 0..e.unsigned_abs() {
                cols.push(col);
            }
        }
        cols
    }

    fn run(&mut self, subgens: &[Word]) -> Result<()> {
        let relator_cols: Vec<Vec<usize>> = self
            .pres
            .relators()
            .iter()
            .map(Self::word_cols)
            .filter(|c| !c.is_empty())
            .collect();
        for w in subgens {
            let cols = Self::word_cols(w);
            if !cols.is_empty() {
                self.scan_and_fill(0, &cols)?;
            }
        }
        let mut alpha = 0;
        while alpha < self.table.len() {
            if !self.is_live(alpha) {
                alpha += 1;
                continue;
            }
            for cols in &relator_cols {
                if !self.is_live(alpha) {
                    break;
                }
                self.scan_and_fill(alpha, cols)?;
            }
            if self.is_live(alpha) {
                // fill any remaining gaps in this row
                for col in 0..self.cols() {
                    let a = self.find(alpha);
                    if self.table[a][col] != UNDEF {
                        continue;
                    }
                    if self.defined >= self.limit {
                        return Err(Error::CapExceeded {
                            what: "coset enumeration",
                            cap: self.limit as u64,
                        });
                    }
                    let fresh = self.define();
                    self.deduce(a, col, fresh);
                    self.process_coincidences();
                }
            }
            alpha += 1;
        }
        Ok(())
    }

    fn compact(&mut self) -> CosetTable {
        let mut remap = alloc::vec![UNDEF; self.table.len()];
        let mut count = 0;
        for i in 0..self.table.len() {
            if self.find(i) == i {
                remap[i] = count;
                count += 1;
            }
        }
        let mut table = alloc::vec![alloc::vec![UNDEF; self.cols()]; count];
        for i in 0..self.table.len() {
            if self.find(i) != i {
                continue;
            }
            for col in 0..self.cols() {
                let t = self.table[i][col];
                assert_ne!(t, UNDEF, "incomplete table after enumeration");
                table[remap[i]][col] = remap[self.find(t)];
            }
        }
        CosetTable {
            ngens: self.pres.generator_count(),
            count,
            table,
        }
    }
}

/// Enumerates the cosets of <subgens> in the presented group. Completing
/// means the index is exactly the coset count; exceeding the limit means the
/// index is unknown (it may or may not be finite).
pub fn todd_coxeter(pres: &FpPresentation, subgens: &[Word], limit: usize) -> Result<CosetTable> {
    let mut e = Enumerator::new(pres, limit);
    e.run(subgens)?;
    let table = e.compact();
    verify(pres, subgens, &table)?;
    Ok(table)
}

/// Full verification pass: every generator column is a bijection, every
/// relator closes at every coset, and subgroup generators fix coset 0.
fn verify(pres: &FpPresentation, subgens: &[Word], t: &CosetTable) -> Result<()> {
    for g in 0..t.ngens {
        let mut seen = alloc::vec![false; t.count];
        for c in 0..t.count {
            let img = t.entry(c, g, false);
            if img >= t.count || seen[img] {
                return Err(Error::Internal(alloc::string::String::from(
                    "coset table column is not a bijection",
                )));
            }
            seen[img] = true;
            if t.entry(img, g, true) != c {
                return Err(Error::Internal(alloc::string::String::from(
                    "coset table inverse column mismatch",
                )));
            }
        }
    }
    for r in pres.relators() {
        for c in 0..t.count {
            if t.trace(c, r) != c {
                return Err(Error::Internal(alloc::string::String::from(
                    "relator does not close on the coset table",
                )));
            }
        }
    }
    for w in subgens {
        if t.trace(0, w) != 0 {
            return Err(Error::Internal(alloc::string::String::from(
                "subgroup generator moves coset 0",
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fpgrp::{parse_word, FpPresentation};
    use alloc::string::ToString;

    fn coxeter_d10() -> FpPresentation {
        FpPresentation::new(
            alloc::vec!["a".to_string(), "b".to_string()],
            alloc::vec!["a^2", "b^2", "(a*b)^5"],
        )
        .unwrap()
    }

    #[test]
    fn d10_has_ten_cosets() {
        let t = todd_coxeter(&coxeter_d10(), &[], 1000).unwrap();
        assert_eq!(t.count, 10);
    }

    #[test]
    fn single_relator_cyclic() {
        let p = FpPresentation::new(alloc::vec!["a".to_string()], alloc::vec!["a"]).unwrap();
        let t = todd_coxeter(&p, &[], 100).unwrap();
        assert_eq!(t.count, 1);
    }

    #[test]
    fn s3_over_c2_has_three_cosets() {
        let p = FpPresentation::new(
            alloc::vec!["a".to_string(), "b".to_string()],
            alloc::vec!["a^2", "b^2", "(a*b)^3"],
        )
        .unwrap();
        let sub = alloc::vec![parse_word("a", &["a".to_string(), "b".to_string()]).unwrap()];
        let t = todd_coxeter(&p, &sub, 100).unwrap();
        assert_eq!(t.count, 3);
    }

    #[test]
    fn free_group_exceeds_any_limit() {
        let p = FpPresentation::new(
            alloc::vec!["a".to_string(), "b".to_string()],
            Vec::<&str>::new(),
        )
        .unwrap();
        assert!(matches!(
            todd_coxeter(&p, &[], 100),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn infinite_dihedral_exceeds_limit() {
        let p = FpPresentation::new(
            alloc::vec!["a".to_string(), "b".to_string()],
            alloc::vec!["a^2", "b^2"],
        )
        .unwrap();
        assert!(matches!(
            todd_coxeter(&p, &[], 200),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn heavy_coincidence_case() {
        // <a, b | a^3, b^3, (a b)^2> is A4-like of order 12
        let p = FpPresentation::new(
            alloc::vec!["a".to_string(), "b".to_string()],
            alloc::vec!["a^3", "b^3", "(a*b)^2"],
        )
        .unwrap();
        let t = todd_coxeter(&p, &[], 1000).unwrap();
        assert_eq!(t.count, 12);
    }

    #[test]
    fn trace_and_permutations() {
        let t = todd_coxeter(&coxeter_d10(), &[], 1000).unwrap();
        let pa = t.generator_permutation(0);
        let pb = t.generator_permutation(1);
        assert_eq!(pa.order(), 2);
        assert_eq!(pb.order(), 2);
        assert_eq!(pa.mul(&pb).order(), 5);
    }
}
