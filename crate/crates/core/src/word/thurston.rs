//! Solving the word problem from the growth function alone: enumerate
//! consequences of the defining relators until the number of classes among
//! short words matches the ball size.

use std::collections::{HashMap, HashSet};

use crate::base::{BaseElement, BaseGroup, Letter};
use crate::error::{Error, Result};
use crate::ext::{Group, SymmetricSet};
use crate::word::Symbol;

const MAX_STAGE: usize = 11;

/// Outcome of a run of the growth-based word problem solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthDemoReport {
    pub equal: bool,
    /// Maximal word length allowed in derivations when the count matched.
    pub stage: usize,
    pub classes: usize,
    pub beta: u64,
}

const T: Symbol = Symbol::Step {
    letter: Letter::new(0, false),
    twisted: false,
};
const TI: Symbol = Symbol::Step {
    letter: Letter::new(0, true),
    twisted: false,
};

fn code(s: Symbol) -> u64 {
    match s {
        Symbol::Lamp { .. } => 0,
        Symbol::Step { letter, .. } if !letter.is_inverse() => 1,
        Symbol::Step { .. } => 2,
        Symbol::Center => 3,
    }
}

fn inverse_word(w: &[Symbol]) -> Vec<Symbol> {
    w.iter().rev().map(|s| s.inverse()).collect()
}

/// Defining relators of `G(ℤ, I)` over `S′` for finite `I`, with lamp
/// commutators up to distance `window`.
pub fn relators(group: &Group, window: usize) -> Result<Vec<Vec<Symbol>>> {
    group.require_integers("the relator enumerator")?;
    if !matches!(group.set(), SymmetricSet::Finite(_)) {
        return Err(Error::Unsupported("the relator enumerator needs a finite set".into()));
    }
    let a = Symbol::LAMP;
    let z = Symbol::Center;
    let mut out = vec![vec![a, a], vec![z, z], vec![T, TI], vec![a, z, a, z], vec![T, z, TI, z]];
    for h in 1..=window {
        let conj: Vec<Symbol> = std::iter::repeat(T)
            .take(h)
            .chain(std::iter::once(a))
            .chain(std::iter::repeat(TI).take(h))
            .collect();
        let mut r = vec![a];
        r.extend(&conj);
        r.push(a);
        r.extend(&conj);
        if group.chi(&BaseElement::Int(h as i64)) {
            r.push(z);
        }
        out.push(r);
    }
    Ok(out)
}

struct Rules {
    by_lhs: HashMap<(usize, u64), Vec<(usize, u64)>>,
    max_lhs: usize,
}

fn pack(w: &[Symbol]) -> u64 {
    w.iter().enumerate().fold(0, |acc, (i, &s)| acc | code(s) << (2 * i))
}

impl Rules {
    fn new(relators: &[Vec<Symbol>], stage: usize) -> Rules {
        let mut by_lhs: HashMap<(usize, u64), Vec<(usize, u64)>> = HashMap::new();
        let mut max_lhs = 0;
        for r in relators {
            for base in [r.clone(), inverse_word(r)] {
                for rot in 0..base.len() {
                    let cyc: Vec<Symbol> = base[rot..].iter().chain(&base[..rot]).copied().collect();
                    for split in 1..=cyc.len() {
                        let (x, y) = cyc.split_at(split);
                        let rhs = inverse_word(y);
                        if x.len() > stage || rhs.len() > stage {
                            continue;
                        }
                        max_lhs = max_lhs.max(x.len());
                        let entry = by_lhs.entry((x.len(), pack(x))).or_default();
                        let target = (rhs.len(), pack(&rhs));
                        if !entry.contains(&target) {
                            entry.push(target);
                        }
                    }
                }
            }
        }
        Rules { by_lhs, max_lhs }
    }
}

fn offset(len: usize) -> usize {
    ((1usize << (2 * len)) - 1) / 3
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let p = parent[parent[x as usize] as usize];
        parent[x as usize] = p;
        x = p;
    }
    x
}

fn union_find_stage(rules: &Rules, stage: usize) -> Vec<u32> {
    let total = offset(stage + 1);
    let mut parent: Vec<u32> = (0..total as u32).collect();
    for len in 0..=stage {
        for value in 0..(1u64 << (2 * len)) {
            let me = (offset(len) as u64 + value) as u32;
            for i in 0..len {
                for j in i + 1..=len.min(i + rules.max_lhs) {
                    let sub = (value >> (2 * i)) & ((1u64 << (2 * (j - i))) - 1);
                    let Some(rhss) = rules.by_lhs.get(&(j - i, sub)) else {
                        continue;
                    };
                    let prefix = value & ((1u64 << (2 * i)) - 1);
                    let suffix = value >> (2 * j);
                    for &(rlen, rval) in rhss {
                        let new_len = len - (j - i) + rlen;
                        if new_len > stage {
                            continue;
                        }
                        let new_value = prefix | rval << (2 * i) | suffix << (2 * (i + rlen));
                        let other = (offset(new_len) as u64 + new_value) as u32;
                        let (ra, rb) = (find(&mut parent, me), find(&mut parent, other));
                        if ra != rb {
                            parent[ra.max(rb) as usize] = ra.min(rb);
                        }
                    }
                }
            }
        }
    }
    parent
}

/// The partition of words of length at most `n` over `S′` obtained from the
/// defining relators at the first stage where its class count reaches the
/// ball size `β(n)`. Built once, it answers any number of equality queries.
pub struct GrowthSolver {
    parent: Vec<u32>,
    n: usize,
    stage: usize,
    classes: usize,
    beta: u64,
}

impl GrowthSolver {
    /// Explores derivations through words of length up to `stage` for
    /// increasing `stage` until the number of classes among words of length
    /// at most `n` equals `beta`.
    pub fn new(group: &Group, n: usize, beta: u64, max_stage: usize) -> Result<GrowthSolver> {
        if *group.base() != BaseGroup::Integers {
            return Err(Error::Unsupported("the growth demo needs base Z".into()));
        }
        let max_stage = max_stage.min(MAX_STAGE);
        let rels = relators(group, max_stage)?;
        for stage in n..=max_stage {
            let rules = Rules::new(&rels, stage);
            let mut parent = union_find_stage(&rules, stage);
            let mut roots = HashSet::new();
            for idx in 0..offset(n + 1) as u32 {
                roots.insert(find(&mut parent, idx));
            }
            let classes = roots.len();
            if (classes as u64) < beta {
                return Err(Error::Inconsistent(format!(
                    "{classes} classes among words of length <= {n}, below the oracle value {beta}"
                )));
            }
            if classes as u64 == beta {
                return Ok(GrowthSolver {
                    parent,
                    n,
                    stage,
                    classes,
                    beta,
                });
            }
        }
        Err(Error::LimitExceeded {
            what: "derivation length",
            value: max_stage + 1,
            limit: max_stage,
        })
    }

    pub fn stage(&self) -> usize {
        self.stage
    }

    pub fn classes(&self) -> usize {
        self.classes
    }

    pub fn equal(&mut self, u: &[Symbol], v: &[Symbol]) -> Result<GrowthDemoReport> {
        if u.iter().chain(v).any(|s| s.is_twisted()) {
            return Err(Error::Unsupported("words must be over S'".into()));
        }
        if u.len().max(v.len()) > self.n {
            return Err(Error::LimitExceeded {
                what: "word length",
                value: u.len().max(v.len()),
                limit: self.n,
            });
        }
        let iu = (offset(u.len()) as u64 + pack(u)) as u32;
        let iv = (offset(v.len()) as u64 + pack(v)) as u32;
        Ok(GrowthDemoReport {
            equal: find(&mut self.parent, iu) == find(&mut self.parent, iv),
            stage: self.stage,
            classes: self.classes,
            beta: self.beta,
        })
    }
}

/// Decides whether two words over `S′` are equal in `G(ℤ, I)` (finite `I`)
/// using only the defining relators and the ball-size oracle `beta`.
pub fn word_problem_from_growth(
    group: &Group,
    u: &[Symbol],
    v: &[Symbol],
    beta: &dyn Fn(usize) -> u64,
    max_stage: usize,
) -> Result<GrowthDemoReport> {
    if u.iter().chain(v).any(|s| s.is_twisted()) {
        return Err(Error::Unsupported("words must be over S'".into()));
    }
    let n = u.len().max(v.len());
    GrowthSolver::new(group, n, beta(n), max_stage)?.equal(u, v)
}
