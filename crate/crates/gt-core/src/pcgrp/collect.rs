//! Collection from the left, one letter at a time.
//!
//! The collector maintains a collected exponent vector and an uncollected
//! word. Each step either merges the leading letter into the vector or
//! rewrites with a power or conjugate relation. Relation applications are
//! reported through a hook together with the uncollected suffix; the hook is
//! how second-cohomology tails are accumulated.

use alloc::collections::VecDeque;

use super::{PcElem, PcPresentation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RelId {
    /// The power relation of generator i.
    Power(usize),
    /// The conjugate relation for g_j^(g_i), i < j.
    Conj(usize, usize),
}

pub trait CollectHooks {
    fn relation_applied(&mut self, rel: RelId, suffix: &VecDeque<(usize, i64)>);
}

pub struct NoHooks;

impl CollectHooks for NoHooks {
    fn relation_applied(&mut self, _rel: RelId, _suffix: &VecDeque<(usize, i64)>) {}
}

pub(crate) fn collect<H: CollectHooks>(
    pres: &PcPresentation,
    letters: &[(usize, i64)],
    hooks: &mut H,
) -> PcElem {
    let n = pres.generator_count();
    let mut a = alloc::vec![0u64; n];
    let mut stack: VecDeque<(usize, i64)> = letters.iter().copied().collect();

    while let Some((i, e)) = stack.pop_front() {
        debug_assert!(i < n, "letter index out of range");
        if e == 0 {
            continue;
        }
        if e < 0 {
            // g_i^e = (g_i^-1) g_i^(e+1), and g_i^-1 = g_i^(e_i - 1) P_i^-1
            if e + 1 != 0 {
                stack.push_front((i, e + 1));
            }
            let power = pres.power_rhs(i);
            for &(j, f) in power.iter() {
                stack.push_front((j, -(f as i64)));
            }
            stack.push_front((i, pres.order_of(i) as i64 - 1));
            continue;
        }
        if e > 1 {
            stack.push_front((i, e - 1));
        }
        // process a single letter g_i
        let tail_pos = (i + 1..n).rev().find(|&j| a[j] != 0);
        match tail_pos {
            None => {
                a[i] += 1;
                if a[i] == pres.order_of(i) {
                    a[i] = 0;
                    hooks.relation_applied(RelId::Power(i), &stack);
                    let power = pres.power_rhs(i);
                    for &(j, f) in power.iter().rev() {
                        stack.push_front((j, f as i64));
                    }
                }
            }
            Some(j) => {
                // peel the last letter g_j of the collected part and rewrite
                // g_j g_i -> g_i (g_j^(g_i))
                a[j] -= 1;
                hooks.relation_applied(RelId::Conj(i, j), &stack);
                let conj = pres.conj_rhs(i, j);
                for &(l, f) in conj.iter().rev() {
                    stack.push_front((l, f as i64));
                }
                stack.push_front((i, 1));
            }
        }
    }
    PcElem(a)
}
