//! A context-free grammar for the conjugacy geodesics of `C₂ ≀ F_r` over
//! `T = {a} ∪ B^±`, a counting chart recognizer, a length-bounded
//! enumerator, a brute-force reference language and the lift to the
//! central extension.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::base::{BaseGroup, FreeWord, Letter};
use crate::conjugacy::oracle::ClassMinOracle;
use crate::conjugacy::wreath_length_fr;
use crate::error::{Error, Result};
use crate::ext::{Wreath, WreathElement};
use crate::word::Symbol;

/// Grammar variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Var {
    Start,
    /// Excursions leaving the root along a letter and returning.
    Excursion(Letter),
    /// Bridges: paths from the first to the last letter of a translation.
    Bridge(Letter, Letter),
    /// The inner part of a translation that is not cyclically reduced.
    Inner(Letter),
}

/// Items on a right-hand side. A `Run` derives a sequence of distinct
/// elements of the production's pool; all runs of one production share it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Item {
    Lamp,
    Letter(Letter),
    Kernel,
    Var(Var),
    Run,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum PoolItem {
    Lamp,
    Excursion(Letter),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Production {
    pub lhs: Var,
    pub rhs: Vec<Item>,
    pub pool: Vec<PoolItem>,
    /// Minimal total number of pool elements drawn by the runs.
    pub min_picks: usize,
}

/// Which production families to instantiate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GrammarVariant {
    /// Families exactly as originally stated.
    AsPrinted,
    /// Adds `S ← a` and requires `u ≠ s` in `S_s ← X F_{t,u} Y`; this is
    /// the variant that matches the brute-force language.
    Corrected,
}

#[derive(Clone, Debug)]
pub struct Grammar {
    rank: usize,
    variant: GrammarVariant,
    lifted: bool,
    productions: Vec<Production>,
    by_lhs: HashMap<Var, Vec<usize>>,
}

/// Outcome of recognizing a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseResult {
    pub accepted: bool,
    /// Number of leftmost derivations, capped at 2.
    pub derivations: u64,
    pub derivation: Option<Derivation>,
}

/// A derivation tree; its preorder listing is the leftmost derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub lhs: Var,
    pub production: usize,
    pub children: Vec<DerivedItem>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DerivedItem {
    Terminal(Symbol),
    Node(Derivation),
}

fn pool_without(rank: usize, excluded: &[Letter]) -> Vec<PoolItem> {
    std::iter::once(PoolItem::Lamp)
        .chain(
            Letter::all(rank)
                .into_iter()
                .filter(|v| !excluded.contains(v))
                .map(PoolItem::Excursion),
        )
        .collect()
}

pub fn build_conjgeo_grammar(rank: usize) -> Grammar {
    build_grammar(rank, GrammarVariant::Corrected)
}

pub fn build_conjgeo_grammar_as_printed(rank: usize) -> Grammar {
    build_grammar(rank, GrammarVariant::AsPrinted)
}

pub fn build_grammar(rank: usize, variant: GrammarVariant) -> Grammar {
    assert!((1..=4).contains(&rank), "rank must be between 1 and 4");
    let letters = Letter::all(rank);
    let mut prods = Vec::new();
    let mut add = |lhs: Var, rhs: Vec<Item>, pool: Vec<PoolItem>, min_picks: usize| {
        prods.push(Production {
            lhs,
            rhs,
            pool,
            min_picks,
        })
    };
    use Item::{Run, Var as V};
    for &s in &letters {
        add(
            Var::Excursion(s),
            vec![Item::Letter(s), Run, Item::Letter(s.inverse())],
            pool_without(rank, &[s.inverse()]),
            1,
        );
    }
    for &s in &letters {
        for &t in &letters {
            for &u in &letters {
                if u == s.inverse() {
                    continue;
                }
                add(
                    Var::Bridge(s, t),
                    vec![Item::Letter(s), Run, V(Var::Bridge(u, t))],
                    pool_without(rank, &[s.inverse(), u]),
                    0,
                );
            }
        }
        add(Var::Bridge(s, s), vec![Item::Letter(s)], Vec::new(), 0);
    }
    add(Var::Start, Vec::new(), Vec::new(), 0);
    for &s in &letters {
        for &t in &letters {
            if s == t.inverse() {
                continue;
            }
            add(
                Var::Start,
                vec![Run, V(Var::Bridge(s, t)), Run],
                pool_without(rank, &[s, t.inverse()]),
                0,
            );
        }
    }
    for &t in &letters {
        add(
            Var::Start,
            vec![Run, Item::Letter(t), V(Var::Inner(t)), Item::Letter(t.inverse()), Run],
            pool_without(rank, &[t]),
            1,
        );
    }
    for &s in &letters {
        for &t in &letters {
            if s == t.inverse() {
                continue;
            }
            add(
                Var::Inner(s),
                vec![Run, Item::Letter(t), V(Var::Inner(t)), Item::Letter(t.inverse()), Run],
                pool_without(rank, &[s.inverse(), t]),
                0,
            );
        }
        for &t in &letters {
            for &u in &letters {
                if s == t.inverse() || u == t.inverse() {
                    continue;
                }
                if variant == GrammarVariant::Corrected && u == s {
                    continue;
                }
                add(
                    Var::Inner(s),
                    vec![Run, V(Var::Bridge(t, u)), Run],
                    pool_without(rank, &[s.inverse(), t, u.inverse()]),
                    0,
                );
            }
        }
    }
    add(Var::Start, vec![Run], pool_without(rank, &[]), 2);
    if variant == GrammarVariant::Corrected {
        add(Var::Start, vec![Item::Lamp], Vec::new(), 0);
    }
    Grammar::from_productions(rank, variant, false, prods)
}

impl Grammar {
    fn from_productions(rank: usize, variant: GrammarVariant, lifted: bool, productions: Vec<Production>) -> Grammar {
        let mut by_lhs: HashMap<Var, Vec<usize>> = HashMap::new();
        for (i, p) in productions.iter().enumerate() {
            by_lhs.entry(p.lhs).or_default().push(i);
        }
        Grammar {
            rank,
            variant,
            lifted,
            productions,
            by_lhs,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn variant(&self) -> GrammarVariant {
        self.variant
    }

    pub fn is_lifted(&self) -> bool {
        self.lifted
    }

    pub fn productions(&self) -> &[Production] {
        &self.productions
    }

    fn base(&self) -> BaseGroup {
        BaseGroup::Free(self.rank)
    }

    fn letter_name(&self, l: Letter) -> String {
        let c = self.base().letter_char(Letter::new(l.index(), false));
        if l.is_inverse() {
            format!("{c}^-1")
        } else {
            c.to_string()
        }
    }

    pub fn terminal_name(&self, s: Symbol) -> String {
        let (name, twisted) = match s {
            Symbol::Lamp { twisted } => ("a".to_string(), twisted),
            Symbol::Step { letter, twisted } => (self.letter_name(letter), twisted),
            Symbol::Center => ("z".to_string(), false),
        };
        if twisted {
            format!("{name}'")
        } else {
            name
        }
    }

    pub fn var_name(&self, v: Var) -> String {
        match v {
            Var::Start => "S".into(),
            Var::Excursion(s) => format!("E_{}", self.letter_name(s)),
            Var::Bridge(s, t) => format!("F_{},{}", self.letter_name(s), self.letter_name(t)),
            Var::Inner(s) => format!("S_{}", self.letter_name(s)),
        }
    }

    fn pool_name(&self, p: PoolItem) -> String {
        match p {
            PoolItem::Lamp => "a".into(),
            PoolItem::Excursion(v) => self.var_name(Var::Excursion(v)),
        }
    }

    /// One production per line. `[x y ..]` is a run of distinct pool
    /// elements; runs of one production never repeat an element between them.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for p in &self.productions {
            let mut parts: Vec<String> = Vec::new();
            let pool = p.pool.iter().map(|&x| self.pool_name(x)).collect::<Vec<_>>().join(" ");
            for item in &p.rhs {
                parts.push(match item {
                    Item::Lamp => "a".into(),
                    Item::Kernel => "z".into(),
                    Item::Letter(l) => self.letter_name(*l),
                    Item::Var(v) => self.var_name(*v),
                    Item::Run => format!("[{pool}]"),
                });
            }
            if parts.is_empty() {
                parts.push("ε".into());
            }
            let _ = write!(out, "{} -> {}", self.var_name(p.lhs), parts.join(" "));
            if p.min_picks > 0 {
                let _ = write!(out, "    (at least {} from the pool)", p.min_picks);
            }
            out.push('\n');
        }
        out
    }

    fn matches(&self, item: Item, s: Symbol) -> bool {
        match (item, s) {
            (Item::Lamp, Symbol::Lamp { twisted }) => self.lifted || !twisted,
            (Item::Letter(l), Symbol::Step { letter, twisted }) => l == letter && (self.lifted || !twisted),
            (Item::Kernel, Symbol::Center) => self.lifted,
            _ => false,
        }
    }

    fn check_terminals(&self, w: &[Symbol]) -> Result<()> {
        for (i, &s) in w.iter().enumerate() {
            let ok = match s {
                Symbol::Lamp { twisted } => self.lifted || !twisted,
                Symbol::Step { letter, twisted } => letter.index() < self.rank && (self.lifted || !twisted),
                Symbol::Center => self.lifted,
            };
            if !ok {
                return Err(Error::parse(i, format!("unknown terminal {s:?}")));
            }
        }
        Ok(())
    }
}

struct Chart<'a> {
    gr: &'a Grammar,
    w: &'a [Symbol],
    var_memo: HashMap<(Var, usize, usize), u64>,
    seq_memo: HashMap<(usize, usize, usize, usize, u32), u64>,
}

impl<'a> Chart<'a> {
    fn count(&mut self, v: Var, i: usize, j: usize) -> u64 {
        if let Some(&c) = self.var_memo.get(&(v, i, j)) {
            return c;
        }
        let mut total = 0u64;
        if let Some(ids) = self.gr.by_lhs.get(&v) {
            for &p in ids {
                total = total.saturating_add(self.seq(p, 0, i, j, 0));
            }
        }
        self.var_memo.insert((v, i, j), total);
        total
    }

    fn pool_count(&mut self, p: PoolItem, i: usize, k: usize) -> u64 {
        match p {
            PoolItem::Lamp => u64::from(k == i + 1 && self.gr.matches(Item::Lamp, self.w[i])),
            PoolItem::Excursion(v) => self.count(Var::Excursion(v), i, k),
        }
    }

    fn seq(&mut self, p: usize, item: usize, pos: usize, end: usize, mask: u32) -> u64 {
        let key = (p, item, pos, end, mask);
        if let Some(&c) = self.seq_memo.get(&key) {
            return c;
        }
        let prod = &self.gr.productions[p];
        let c = if item == prod.rhs.len() {
            u64::from(pos == end && mask.count_ones() as usize >= prod.min_picks)
        } else {
            match prod.rhs[item] {
                it @ (Item::Lamp | Item::Letter(_) | Item::Kernel) => {
                    if pos < end && self.gr.matches(it, self.w[pos]) {
                        self.seq(p, item + 1, pos + 1, end, mask)
                    } else {
                        0
                    }
                }
                Item::Var(v) => {
                    let mut acc = 0u64;
                    for k in pos + 1..=end {
                        let left = self.count(v, pos, k);
                        if left > 0 {
                            acc = acc.saturating_add(left.saturating_mul(self.seq(p, item + 1, k, end, mask)));
                        }
                    }
                    acc
                }
                Item::Run => {
                    let mut acc = self.seq(p, item + 1, pos, end, mask);
                    let pool = prod.pool.clone();
                    for (b, &x) in pool.iter().enumerate() {
                        if mask >> b & 1 == 1 {
                            continue;
                        }
                        for k in pos + 1..=end {
                            let left = self.pool_count(x, pos, k);
                            if left > 0 {
                                let right = self.seq(p, item, k, end, mask | 1 << b);
                                acc = acc.saturating_add(left.saturating_mul(right));
                            }
                        }
                    }
                    acc
                }
            }
        };
        self.seq_memo.insert(key, c);
        c
    }

    fn tree(&mut self, v: Var, i: usize, j: usize) -> Derivation {
        let ids = self.gr.by_lhs[&v].clone();
        for p in ids {
            if self.seq(p, 0, i, j, 0) > 0 {
                let mut children = Vec::new();
                self.walk(p, 0, i, j, 0, &mut children);
                return Derivation {
                    lhs: v,
                    production: p,
                    children,
                };
            }
        }
        unreachable!("tree requested for an underivable span")
    }

    fn walk(&mut self, p: usize, item: usize, pos: usize, end: usize, mask: u32, out: &mut Vec<DerivedItem>) {
        let prod = self.gr.productions[p].clone();
        if item == prod.rhs.len() {
            return;
        }
        match prod.rhs[item] {
            Item::Lamp | Item::Letter(_) | Item::Kernel => {
                out.push(DerivedItem::Terminal(self.w[pos]));
                self.walk(p, item + 1, pos + 1, end, mask, out);
            }
            Item::Var(v) => {
                for k in pos + 1..=end {
                    if self.count(v, pos, k) > 0 && self.seq(p, item + 1, k, end, mask) > 0 {
                        out.push(DerivedItem::Node(self.tree(v, pos, k)));
                        self.walk(p, item + 1, k, end, mask, out);
                        return;
                    }
                }
            }
            Item::Run => {
                for (b, &x) in prod.pool.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        continue;
                    }
                    for k in pos + 1..=end {
                        if self.pool_count(x, pos, k) > 0 && self.seq(p, item, k, end, mask | 1 << b) > 0 {
                            match x {
                                PoolItem::Lamp => out.push(DerivedItem::Terminal(self.w[pos])),
                                PoolItem::Excursion(e) => {
                                    out.push(DerivedItem::Node(self.tree(Var::Excursion(e), pos, k)))
                                }
                            }
                            self.walk(p, item, k, end, mask | 1 << b, out);
                            return;
                        }
                    }
                }
                self.walk(p, item + 1, pos, end, mask, out);
            }
        }
    }
}

impl Derivation {
    /// The productions of the leftmost derivation, rendered one per entry.
    pub fn leftmost(&self, gr: &Grammar) -> Vec<String> {
        let mut out = Vec::new();
        self.collect(gr, &mut out);
        out
    }

    fn collect(&self, gr: &Grammar, out: &mut Vec<String>) {
        let rhs: Vec<String> = self
            .children
            .iter()
            .map(|c| match c {
                DerivedItem::Terminal(s) => gr.terminal_name(*s),
                DerivedItem::Node(d) => gr.var_name(d.lhs),
            })
            .collect();
        let rhs = if rhs.is_empty() { "ε".to_string() } else { rhs.join(" ") };
        out.push(format!("{} -> {}", gr.var_name(self.lhs), rhs));
        for c in &self.children {
            if let DerivedItem::Node(d) = c {
                d.collect(gr, out);
            }
        }
    }
}

pub fn recognize(gr: &Grammar, w: &[Symbol]) -> Result<ParseResult> {
    gr.check_terminals(w)?;
    let mut chart = Chart {
        gr,
        w,
        var_memo: HashMap::new(),
        seq_memo: HashMap::new(),
    };
    let count = chart.count(Var::Start, 0, w.len());
    let derivation = (count > 0).then(|| chart.tree(Var::Start, 0, w.len()));
    Ok(ParseResult {
        accepted: count > 0,
        derivations: count.min(2),
        derivation,
    })
}

type Bag = HashMap<Vec<Symbol>, u64>;

struct Generator<'a> {
    gr: &'a Grammar,
    var_memo: HashMap<(Var, usize), Bag>,
    seq_memo: HashMap<(usize, usize, usize, u32), Bag>,
}

fn concat(left: &Bag, right: &Bag, out: &mut Bag) {
    for (w1, c1) in left {
        for (w2, c2) in right {
            let mut w = w1.clone();
            w.extend_from_slice(w2);
            let e = out.entry(w).or_insert(0);
            *e = e.saturating_add(c1.saturating_mul(*c2));
        }
    }
}

impl<'a> Generator<'a> {
    fn terminals(&self, item: Item) -> Vec<Symbol> {
        let tw: &[bool] = if self.gr.lifted { &[false, true] } else { &[false] };
        match item {
            Item::Lamp => tw.iter().map(|&t| Symbol::Lamp { twisted: t }).collect(),
            Item::Letter(l) => tw
                .iter()
                .map(|&t| Symbol::Step {
                    letter: l,
                    twisted: t,
                })
                .collect(),
            Item::Kernel => vec![Symbol::Center],
            _ => Vec::new(),
        }
    }

    fn var(&mut self, v: Var, m: usize) -> Bag {
        if let Some(b) = self.var_memo.get(&(v, m)) {
            return b.clone();
        }
        let mut out = Bag::new();
        if let Some(ids) = self.gr.by_lhs.get(&v).cloned() {
            for p in ids {
                for (w, c) in self.seq(p, 0, m, 0) {
                    let e = out.entry(w).or_insert(0);
                    *e = e.saturating_add(c);
                }
            }
        }
        self.var_memo.insert((v, m), out.clone());
        out
    }

    fn pool(&mut self, x: PoolItem, m: usize) -> Bag {
        match x {
            PoolItem::Lamp if m == 1 => self.terminals(Item::Lamp).into_iter().map(|s| (vec![s], 1)).collect(),
            PoolItem::Lamp => Bag::new(),
            PoolItem::Excursion(v) => self.var(Var::Excursion(v), m),
        }
    }

    fn seq(&mut self, p: usize, item: usize, m: usize, mask: u32) -> Bag {
        let key = (p, item, m, mask);
        if let Some(b) = self.seq_memo.get(&key) {
            return b.clone();
        }
        let prod = self.gr.productions[p].clone();
        let mut out = Bag::new();
        if item == prod.rhs.len() {
            if m == 0 && mask.count_ones() as usize >= prod.min_picks {
                out.insert(Vec::new(), 1);
            }
        } else {
            match prod.rhs[item] {
                it @ (Item::Lamp | Item::Letter(_) | Item::Kernel) => {
                    if m >= 1 {
                        let rest = self.seq(p, item + 1, m - 1, mask);
                        let head: Bag = self.terminals(it).into_iter().map(|s| (vec![s], 1)).collect();
                        concat(&head, &rest, &mut out);
                    }
                }
                Item::Var(v) => {
                    for k in 1..=m {
                        let left = self.var(v, k);
                        if left.is_empty() {
                            continue;
                        }
                        let right = self.seq(p, item + 1, m - k, mask);
                        concat(&left, &right, &mut out);
                    }
                }
                Item::Run => {
                    out = self.seq(p, item + 1, m, mask);
                    for (b, &x) in prod.pool.iter().enumerate() {
                        if mask >> b & 1 == 1 {
                            continue;
                        }
                        for k in 1..=m {
                            let left = self.pool(x, k);
                            if left.is_empty() {
                                continue;
                            }
                            let right = self.seq(p, item, m - k, mask | 1 << b);
                            concat(&left, &right, &mut out);
                        }
                    }
                }
            }
        }
        self.seq_memo.insert(key, out.clone());
        out
    }
}

pub const DEFAULT_ENUMERATION_LIMIT: usize = 8;

/// Words of length at most `n` in the language, with their derivation counts.
pub fn enumerate_with_counts(gr: &Grammar, n: usize, limit: usize) -> Result<HashMap<Vec<Symbol>, u64>> {
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "enumeration length",
            value: n,
            limit,
        });
    }
    let mut gen = Generator {
        gr,
        var_memo: HashMap::new(),
        seq_memo: HashMap::new(),
    };
    let mut out = HashMap::new();
    for m in 0..=n {
        out.extend(gen.var(Var::Start, m));
    }
    Ok(out)
}

/// `L(gr) ∩ T^{≤n}`.
pub fn enumerate_language(gr: &Grammar, n: usize) -> Result<BTreeSet<Vec<Symbol>>> {
    Ok(enumerate_with_counts(gr, n, DEFAULT_ENUMERATION_LIMIT)?
        .into_keys()
        .collect())
}

fn wreath_of(rank: usize, w: &[Symbol]) -> WreathElement {
    crate::word::evaluate_wreath(&Wreath::new(BaseGroup::Free(rank)), w)
}

/// Words of length at most `n` over `T` whose length equals the minimal
/// length in the conjugacy class of their value, by brute force.
pub fn conjgeo_oracle(n: usize, rank: usize) -> Result<BTreeSet<Vec<Symbol>>> {
    if n > 7 {
        return Err(Error::LimitExceeded {
            what: "oracle word length",
            value: n,
            limit: 7,
        });
    }
    if !(1..=2).contains(&rank) {
        return Err(Error::LimitExceeded {
            what: "oracle rank",
            value: rank,
            limit: 2,
        });
    }
    let alphabet = crate::word::GeneratingSet::Wreath.symbols(&BaseGroup::Free(rank));
    let mut oracle = ClassMinOracle::new(rank);
    let mut out = BTreeSet::new();
    let mut word = Vec::new();
    collect_oracle(&alphabet, n, rank, &mut oracle, &mut word, &mut out)?;
    Ok(out)
}

fn collect_oracle(
    alphabet: &[Symbol],
    n: usize,
    rank: usize,
    oracle: &mut ClassMinOracle,
    word: &mut Vec<Symbol>,
    out: &mut BTreeSet<Vec<Symbol>>,
) -> Result<()> {
    let g = wreath_of(rank, word);
    if wreath_length_fr(&g)? == word.len() && oracle.class_min(&g)? == word.len() {
        out.insert(word.clone());
    }
    if word.len() == n {
        return Ok(());
    }
    for &s in alphabet {
        word.push(s);
        collect_oracle(alphabet, n, rank, oracle, word, out)?;
        word.pop();
    }
    Ok(())
}

/// The grammar for `τ⁻¹(L) ∪ {z}`: every terminal also matches its twisted
/// preimage, and `S ← z` is added for the nontrivial element of the kernel.
pub fn lift_grammar(gr: &Grammar) -> Grammar {
    let mut prods = gr.productions.clone();
    prods.push(Production {
        lhs: Var::Start,
        rhs: vec![Item::Kernel],
        pool: Vec::new(),
        min_picks: 0,
    });
    Grammar::from_productions(gr.rank, gr.variant, true, prods)
}

/// All preimages of a `T`-word over `τ⁻¹(T)`.
pub fn preimages(w: &[Symbol]) -> Vec<Vec<Symbol>> {
    let mut out = vec![Vec::new()];
    for &s in w {
        let twisted = match s {
            Symbol::Lamp { .. } => Symbol::Lamp { twisted: true },
            Symbol::Step { letter, .. } => Symbol::Step { letter, twisted: true },
            Symbol::Center => Symbol::Center,
        };
        let plain = s.untwisted().unwrap_or(s);
        let mut next = Vec::with_capacity(out.len() * 2);
        for prefix in &out {
            for x in [plain, twisted] {
                let mut v = prefix.clone();
                v.push(x);
                next.push(v);
            }
            if plain == twisted {
                next.pop();
            }
        }
        out = next;
    }
    out
}

/// Free-group word read off a `T`-word, ignoring lamps.
pub fn translation_of(w: &[Symbol]) -> FreeWord {
    FreeWord::from_letters(w.iter().filter_map(|s| match s {
        Symbol::Step { letter, .. } => Some(*letter),
        _ => None,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_symbols;

    fn w(s: &str) -> Vec<Symbol> {
        parse_symbols(s, &BaseGroup::Free(2)).unwrap()
    }

    #[test]
    fn basic_membership() {
        let gr = build_conjgeo_grammar(2);
        let eps = recognize(&gr, &[]).unwrap();
        assert!(eps.accepted);
        assert_eq!(eps.derivations, 1);
        assert!(recognize(&gr, &w("a")).unwrap().accepted);
        assert!(!recognize(&build_conjgeo_grammar_as_printed(2), &w("a")).unwrap().accepted);
        assert!(!recognize(&gr, &w("saS")).unwrap().accepted);
        assert!(recognize(&gr, &w("asaS")).unwrap().accepted);
        assert!(recognize(&gr, &w("t")).unwrap().accepted);
        assert!(!recognize(&gr, &w("tT")).unwrap().accepted);
        assert!(recognize(&gr, &w("a'")).is_err());
    }

    #[test]
    fn leftmost_derivation_is_reported() {
        let gr = build_conjgeo_grammar(2);
        let r = recognize(&gr, &w("asaS")).unwrap();
        let lines = r.derivation.unwrap().leftmost(&gr);
        assert_eq!(lines[0], "S -> a E_s");
        assert_eq!(lines[1], "E_s -> s a s^-1");
    }

    #[test]
    fn lifted_grammar_accepts_kernel_letter() {
        let gr = lift_grammar(&build_conjgeo_grammar(2));
        assert!(recognize(&gr, &[Symbol::Center]).unwrap().accepted);
        assert!(recognize(&gr, &w("a's't")).unwrap().accepted);
        assert!(!recognize(&gr, &w("zz")).unwrap().accepted);
    }

    #[test]
    fn preimage_count() {
        assert_eq!(preimages(&w("ast")).len(), 8);
    }
}
