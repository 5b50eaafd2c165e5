//! Words over the generating sets, evaluation, and normal forms.

mod thurston;

pub use thurston::{relators, word_problem_from_growth, GrowthDemoReport, GrowthSolver};

use crate::base::{BaseElement, BaseGroup, Letter};
use crate::error::{Error, Result};
use crate::ext::{GElement, Group, Wreath, WreathElement};

/// A generator symbol. `twisted` multiplies the generator by `z`; written
/// with a trailing `'`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Symbol {
    Lamp { twisted: bool },
    Step { letter: Letter, twisted: bool },
    Center,
}

impl Symbol {
    pub const LAMP: Symbol = Symbol::Lamp { twisted: false };

    pub fn step(letter: Letter) -> Symbol {
        Symbol::Step {
            letter,
            twisted: false,
        }
    }

    pub fn inverse(self) -> Symbol {
        match self {
            Symbol::Step { letter, twisted } => Symbol::Step {
                letter: letter.inverse(),
                twisted,
            },
            other => other,
        }
    }

    pub fn is_twisted(self) -> bool {
        matches!(
            self,
            Symbol::Lamp { twisted: true } | Symbol::Step { twisted: true, .. }
        )
    }

    /// The symbol with its twist removed; `Center` has no untwisted image.
    pub fn untwisted(self) -> Option<Symbol> {
        match self {
            Symbol::Lamp { .. } => Some(Symbol::LAMP),
            Symbol::Step { letter, .. } => Some(Symbol::step(letter)),
            Symbol::Center => None,
        }
    }

    pub fn render(self, base: &BaseGroup) -> String {
        let (c, tw) = match self {
            Symbol::Lamp { twisted } => ('a', twisted),
            Symbol::Step { letter, twisted } => (base.letter_char(letter), twisted),
            Symbol::Center => ('z', false),
        };
        if tw {
            format!("{c}'")
        } else {
            c.to_string()
        }
    }
}

/// The generating sets in use: `S′ = {a, base letters, z}`, its doubled
/// variant `S = {x, xz}` and the lamplighter set `T = {a, base letters}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GeneratingSet {
    Standard,
    Doubled,
    Wreath,
}

impl GeneratingSet {
    pub fn symbols(self, base: &BaseGroup) -> Vec<Symbol> {
        let steps = base.letters().into_iter().map(Symbol::step);
        match self {
            GeneratingSet::Standard => std::iter::once(Symbol::LAMP)
                .chain(steps)
                .chain(std::iter::once(Symbol::Center))
                .collect(),
            GeneratingSet::Wreath => std::iter::once(Symbol::LAMP).chain(steps).collect(),
            GeneratingSet::Doubled => {
                let mut out = vec![Symbol::LAMP, Symbol::Lamp { twisted: true }];
                for l in base.letters() {
                    out.push(Symbol::step(l));
                    out.push(Symbol::Step {
                        letter: l,
                        twisted: true,
                    });
                }
                out
            }
        }
    }

    pub fn allows(self, s: Symbol) -> bool {
        match self {
            GeneratingSet::Standard => !s.is_twisted(),
            GeneratingSet::Doubled => s != Symbol::Center,
            GeneratingSet::Wreath => !s.is_twisted() && s != Symbol::Center,
        }
    }

    pub fn parse(text: &str) -> Result<GeneratingSet> {
        match text {
            "S'" | "Sprime" | "standard" => Ok(GeneratingSet::Standard),
            "S" | "doubled" => Ok(GeneratingSet::Doubled),
            "T" | "wreath" => Ok(GeneratingSet::Wreath),
            _ => Err(Error::parse(0, format!("unknown generating set {text:?}"))),
        }
    }
}

/// Parses a word such as `a t a' T z`; whitespace is ignored and `e`, `1`
/// or the empty string denote the empty word.
pub fn parse_symbols(text: &str, base: &BaseGroup) -> Result<Vec<Symbol>> {
    let t = text.trim();
    if t.is_empty() || t == "e" || t == "1" {
        return Ok(Vec::new());
    }
    let mut out: Vec<Symbol> = Vec::new();
    for (i, c) in t.char_indices() {
        match c {
            c if c.is_whitespace() => {}
            'a' => out.push(Symbol::LAMP),
            'z' => out.push(Symbol::Center),
            '\'' => match out.last_mut() {
                Some(Symbol::Lamp { twisted }) | Some(Symbol::Step { twisted, .. }) if !*twisted => {
                    *twisted = true
                }
                _ => return Err(Error::parse(i, "a prime must follow a or a base letter")),
            },
            c => match base.parse_letter(c) {
                Some(l) => out.push(Symbol::step(l)),
                None => return Err(Error::parse(i, format!("unknown generator {c:?}"))),
            },
        }
    }
    Ok(out)
}

pub fn render_symbols(word: &[Symbol], base: &BaseGroup) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter().map(|s| s.render(base)).collect()
}

/// A word over one of the generating sets.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GeneratorWord {
    pub set: GeneratingSet,
    pub symbols: Vec<Symbol>,
}

impl GeneratorWord {
    pub fn new(set: GeneratingSet, symbols: Vec<Symbol>) -> Result<GeneratorWord> {
        if let Some(s) = symbols.iter().find(|s| !set.allows(**s)) {
            return Err(Error::parse(0, format!("symbol {s:?} is not in the generating set {set:?}")));
        }
        Ok(GeneratorWord { set, symbols })
    }

    pub fn parse(text: &str, set: GeneratingSet, base: &BaseGroup) -> Result<GeneratorWord> {
        GeneratorWord::new(set, parse_symbols(text, base)?)
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn inverse(&self) -> GeneratorWord {
        GeneratorWord {
            set: self.set,
            symbols: self.symbols.iter().rev().map(|s| s.inverse()).collect(),
        }
    }

    pub fn render(&self, base: &BaseGroup) -> String {
        render_symbols(&self.symbols, base)
    }
}

/// `x · s` in place.
pub fn push_symbol(group: &Group, x: &mut GElement, s: Symbol) {
    match s {
        Symbol::Lamp { twisted } => {
            group.push_lamp(x);
            x.center ^= twisted;
        }
        Symbol::Step { letter, twisted } => {
            group.push_step(x, letter);
            x.center ^= twisted;
        }
        Symbol::Center => group.push_center(x),
    }
}

pub fn evaluate_symbols(group: &Group, word: &[Symbol]) -> GElement {
    let mut x = group.identity();
    for &s in word {
        push_symbol(group, &mut x, s);
    }
    x
}

pub fn evaluate(group: &Group, word: &GeneratorWord) -> GElement {
    evaluate_symbols(group, &word.symbols)
}

/// Image of a word in `C₂ ≀ H`; twists and `z` are dropped.
pub fn evaluate_wreath(wreath: &Wreath, word: &[Symbol]) -> WreathElement {
    let mut x = wreath.identity();
    for &s in word {
        match s {
            Symbol::Lamp { .. } => wreath.push_lamp(&mut x),
            Symbol::Step { letter, .. } => wreath.push_step(&mut x, letter),
            Symbol::Center => {}
        }
    }
    x
}

pub fn is_identity(group: &Group, word: &GeneratorWord) -> bool {
    group.is_identity(&evaluate(group, word))
}

/// The normal form string: lamps `a(h)` in descending order, then `z`,
/// then `t(k)`, joined by `·`; the identity is `1`.
pub fn normal_form(group: &Group, word: &GeneratorWord) -> String {
    render_element(group, &evaluate(group, word))
}

pub fn render_element(group: &Group, x: &GElement) -> String {
    let base = group.base();
    let mut parts: Vec<String> = x
        .support
        .iter()
        .rev()
        .map(|h| format!("a({})", base.format_element(h)))
        .collect();
    if x.center {
        parts.push("z".to_string());
    }
    if !base.is_identity(&x.translation) {
        parts.push(format!("t({})", base.format_element(&x.translation)));
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("·")
    }
}

/// Parses either a normal-form string or a word over `S′ ∪ S`.
pub fn parse_element(group: &Group, text: &str) -> Result<GElement> {
    let t = text.trim();
    if !t.contains('(') {
        return Ok(evaluate_symbols(group, &parse_symbols(t, group.base())?));
    }
    let base = group.base();
    let mut x = group.identity();
    for piece in t.split('·').map(str::trim) {
        let factor = if piece == "z" {
            group.z()
        } else if piece == "1" {
            group.identity()
        } else if let Some(inner) = piece.strip_prefix("a(").and_then(|p| p.strip_suffix(')')) {
            group.lamp(base.parse_element(inner)?)
        } else if let Some(inner) = piece.strip_prefix("t(").and_then(|p| p.strip_suffix(')')) {
            group.translation(base.parse_element(inner)?)
        } else {
            return Err(Error::parse(0, format!("bad normal-form factor {piece:?}")));
        };
        x = group.multiply(&x, &factor);
    }
    Ok(x)
}

/// A word over `S′` representing `x`, following its normal form.
pub fn element_to_word(group: &Group, x: &GElement) -> Vec<Symbol> {
    let base = group.base();
    let mut out = Vec::new();
    let mut cur: BaseElement = base.identity();
    for h in x.support.iter().rev() {
        out.extend(base.geodesic(&base.ldiv(&cur, h)).into_iter().map(Symbol::step));
        out.push(Symbol::LAMP);
        cur = h.clone();
    }
    out.extend(
        base.geodesic(&base.ldiv(&cur, &x.translation))
            .into_iter()
            .map(Symbol::step),
    );
    if x.center {
        out.push(Symbol::Center);
    }
    out
}
