//! Argumentation frameworks, argument identifiers and extensions.
//!
//! An [`Af`] is immutable once built. Arguments are kept in canonical
//! (lexicographic) order and addressed internally by their position, which
//! is what the solvers operate on.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// How an argument identifier was produced.
///
/// Only [`ArgKind::Plain`] can come out of a parser. Every other variant is
/// minted by a translation or a reduction, which keeps the fresh arguments
/// disjoint from anything a user can write down.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArgKind {
    Plain(Box<str>),
    /// `a′`
    Prime(ArgumentId),
    /// `ā`
    Bar(ArgumentId),
    /// `a°`
    Circ(ArgumentId),
    /// `ā°`
    BarCirc(ArgumentId),
    /// Copy of an argument in a numbered layer.
    Layer(ArgumentId, u32),
    /// An attack `(a, b)` reified as an argument.
    Attack(ArgumentId, ArgumentId),
    /// Rule argument of a Horn reduction, 1-based.
    Rule(u32),
    /// Clause argument of a CNF reduction, 1-based.
    Clause(u32),
    SpecialT,
    SpecialS,
    SpecialB,
}

struct Inner {
    kind: ArgKind,
    text: Box<str>,
}

/// Identifier of an argument: a plain name or a decorated fresh argument.
///
/// Identity is structural. The textual form (`a__p`, `r__a__b`, `__t`, ...)
/// is used for ordering and serialization only.
#[derive(Clone)]
pub struct ArgumentId(Arc<Inner>);

/// Returns `true` if `name` is usable as a plain argument name.
pub fn is_valid_plain_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'_')
        && !name.contains("__")
}

impl ArgumentId {
    fn from_kind(kind: ArgKind) -> Self {
        let text = match &kind {
            ArgKind::Plain(n) => n.to_string(),
            ArgKind::Prime(a) => format!("{a}__p"),
            ArgKind::Bar(a) => format!("{a}__n"),
            ArgKind::Circ(a) => format!("{a}__o"),
            ArgKind::BarCirc(a) => format!("{a}__no"),
            ArgKind::Layer(a, i) => format!("{a}__L{i}"),
            ArgKind::Attack(a, b) => format!("r__{a}__{b}"),
            ArgKind::Rule(i) => format!("r__{i}"),
            ArgKind::Clause(i) => format!("c__{i}"),
            ArgKind::SpecialT => "__t".to_owned(),
            ArgKind::SpecialS => "__s".to_owned(),
            ArgKind::SpecialB => "__b".to_owned(),
        };
        ArgumentId(Arc::new(Inner {
            kind,
            text: text.into_boxed_str(),
        }))
    }

    /// A plain argument. Fails with [`Error::ReservedName`] on names that
    /// are not `[a-zA-Z0-9_]+` or that contain the reserved `__` separator.
    pub fn plain(name: &str) -> Result<Self> {
        if !is_valid_plain_name(name) {
            return Err(Error::ReservedName {
                line: None,
                name: name.to_owned(),
            });
        }
        Ok(Self::from_kind(ArgKind::Plain(name.into())))
    }

    /// Panicking variant of [`ArgumentId::plain`] for literals in code and tests.
    pub fn named(name: &str) -> Self {
        Self::plain(name).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn prime(&self) -> Self {
        Self::from_kind(ArgKind::Prime(self.clone()))
    }
    pub fn bar(&self) -> Self {
        Self::from_kind(ArgKind::Bar(self.clone()))
    }
    pub fn circ(&self) -> Self {
        Self::from_kind(ArgKind::Circ(self.clone()))
    }
    pub fn bar_circ(&self) -> Self {
        Self::from_kind(ArgKind::BarCirc(self.clone()))
    }
    pub fn layer(&self, i: u32) -> Self {
        Self::from_kind(ArgKind::Layer(self.clone(), i))
    }
    pub fn attack(from: &ArgumentId, to: &ArgumentId) -> Self {
        Self::from_kind(ArgKind::Attack(from.clone(), to.clone()))
    }
    pub fn rule(i: u32) -> Self {
        Self::from_kind(ArgKind::Rule(i))
    }
    pub fn clause(i: u32) -> Self {
        Self::from_kind(ArgKind::Clause(i))
    }
    pub fn special_t() -> Self {
        Self::from_kind(ArgKind::SpecialT)
    }
    pub fn special_s() -> Self {
        Self::from_kind(ArgKind::SpecialS)
    }
    pub fn special_b() -> Self {
        Self::from_kind(ArgKind::SpecialB)
    }

    pub fn kind(&self) -> &ArgKind {
        &self.0.kind
    }

    pub fn as_str(&self) -> &str {
        &self.0.text
    }

    pub fn is_plain(&self) -> bool {
        matches!(self.0.kind, ArgKind::Plain(_))
    }
}

impl PartialEq for ArgumentId {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.text == other.0.text && self.0.kind == other.0.kind)
    }
}

impl Eq for ArgumentId {}

impl Hash for ArgumentId {
    fn hash<H: Hasher>(&self, state: &mut H) {
        // Equal kinds always render to equal text.
        self.0.text.hash(state);
    }
}

impl Ord for ArgumentId {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        self.0
            .text
            .cmp(&other.0.text)
            .then_with(|| self.0.kind.cmp(&other.0.kind))
    }
}

impl PartialOrd for ArgumentId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.text)
    }
}

impl fmt::Debug for ArgumentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.text)
    }
}

/// A set of arguments.
///
/// Ordered by size first and then lexicographically, which is the
/// canonical order used whenever extension sets are printed.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Extension(BTreeSet<ArgumentId>);

impl Extension {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds an extension of plain arguments; panics on invalid names.
    pub fn from_names<'a>(names: impl IntoIterator<Item = &'a str>) -> Self {
        names.into_iter().map(ArgumentId::named).collect()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, a: &ArgumentId) -> bool {
        self.0.contains(a)
    }

    pub fn insert(&mut self, a: ArgumentId) -> bool {
        self.0.insert(a)
    }

    pub fn iter(&self) -> impl Iterator<Item = &ArgumentId> {
        self.0.iter()
    }

    pub fn is_subset(&self, other: &Extension) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn members(&self) -> &BTreeSet<ArgumentId> {
        &self.0
    }

    /// Keeps the members that satisfy `keep`.
    pub fn filtered(&self, mut keep: impl FnMut(&ArgumentId) -> bool) -> Extension {
        Extension(self.0.iter().filter(|a| keep(a)).cloned().collect())
    }
}

impl FromIterator<ArgumentId> for Extension {
    fn from_iter<I: IntoIterator<Item = ArgumentId>>(iter: I) -> Self {
        Extension(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Extension {
    type Item = &'a ArgumentId;
    type IntoIter = std::collections::btree_set::Iter<'a, ArgumentId>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl Ord for Extension {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().cmp(other.0.iter()))
    }
}

impl PartialOrd for Extension {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An argumentation framework `(A, R)`.
#[derive(Clone)]
pub struct Af {
    args: Vec<ArgumentId>,
    index: HashMap<ArgumentId, usize>,
    attacks: Vec<(usize, usize)>,
    attack_set: HashSet<(usize, usize)>,
    attackers: Vec<Vec<usize>>,
    attackees: Vec<Vec<usize>>,
}

impl Af {
    /// Builds a framework, checking that there is at least one argument and
    /// that every attack endpoint is an argument.
    pub fn new(
        args: impl IntoIterator<Item = ArgumentId>,
        attacks: impl IntoIterator<Item = (ArgumentId, ArgumentId)>,
    ) -> Result<Self> {
        let args: BTreeSet<ArgumentId> = args.into_iter().collect();
        if args.is_empty() {
            return Err(Error::EmptyArguments);
        }
        let args: Vec<ArgumentId> = args.into_iter().collect();
        let index: HashMap<ArgumentId, usize> = args
            .iter()
            .enumerate()
            .map(|(i, a)| (a.clone(), i))
            .collect();
        let mut pairs = BTreeSet::new();
        for (a, b) in attacks {
            match (index.get(&a), index.get(&b)) {
                (Some(&i), Some(&j)) => {
                    pairs.insert((i, j));
                }
                _ => return Err(Error::DanglingAttack(a.to_string(), b.to_string())),
            }
        }
        Ok(Self::from_indexed(args, index, pairs.into_iter().collect()))
    }

    /// Builds a framework over plain names; panics on invalid input.
    pub fn from_names(args: &[&str], attacks: &[(&str, &str)]) -> Self {
        Af::new(
            args.iter().map(|a| ArgumentId::named(a)),
            attacks
                .iter()
                .map(|(a, b)| (ArgumentId::named(a), ArgumentId::named(b))),
        )
        .unwrap_or_else(|e| panic!("{e}"))
    }

    fn from_indexed(
        args: Vec<ArgumentId>,
        index: HashMap<ArgumentId, usize>,
        attacks: Vec<(usize, usize)>,
    ) -> Self {
        let n = args.len();
        let mut attackers = vec![Vec::new(); n];
        let mut attackees = vec![Vec::new(); n];
        for &(i, j) in &attacks {
            attackees[i].push(j);
            attackers[j].push(i);
        }
        let attack_set = attacks.iter().copied().collect();
        Af {
            args,
            index,
            attacks,
            attack_set,
            attackers,
            attackees,
        }
    }

    pub fn len(&self) -> usize {
        self.args.len()
    }

    /// Always `false`; frameworks are non-empty by construction.
    pub fn is_empty(&self) -> bool {
        self.args.is_empty()
    }

    pub fn args(&self) -> &[ArgumentId] {
        &self.args
    }

    pub fn arg(&self, i: usize) -> &ArgumentId {
        &self.args[i]
    }

    pub fn index_of(&self, a: &ArgumentId) -> Option<usize> {
        self.index.get(a).copied()
    }

    pub fn contains(&self, a: &ArgumentId) -> bool {
        self.index.contains_key(a)
    }

    /// Attacks as index pairs, sorted.
    pub fn attack_indices(&self) -> &[(usize, usize)] {
        &self.attacks
    }

    pub fn attacks(&self) -> impl Iterator<Item = (&ArgumentId, &ArgumentId)> + '_ {
        self.attacks
            .iter()
            .map(move |&(i, j)| (&self.args[i], &self.args[j]))
    }

    pub fn num_attacks(&self) -> usize {
        self.attacks.len()
    }

    pub fn attacks_idx(&self, i: usize, j: usize) -> bool {
        self.attack_set.contains(&(i, j))
    }

    pub fn has_attack(&self, a: &ArgumentId, b: &ArgumentId) -> bool {
        match (self.index_of(a), self.index_of(b)) {
            (Some(i), Some(j)) => self.attacks_idx(i, j),
            _ => false,
        }
    }

    pub fn attackers_of(&self, i: usize) -> &[usize] {
        &self.attackers[i]
    }

    pub fn attackees_of(&self, i: usize) -> &[usize] {
        &self.attackees[i]
    }

    /// `F ∪ G`, argument-wise and attack-wise.
    pub fn union(&self, other: &Af) -> Af {
        let args = self.args.iter().chain(other.args.iter()).cloned();
        let attacks = self
            .attacks()
            .chain(other.attacks())
            .map(|(a, b)| (a.clone(), b.clone()));
        Af::new(args, attacks).expect("union of valid frameworks is valid")
    }

    /// `F ⊆ G`: both the arguments and the attacks are included.
    pub fn is_subframework(&self, other: &Af) -> bool {
        self.args.iter().all(|a| other.contains(a))
            && self.attacks().all(|(a, b)| other.has_attack(a, b))
    }

    /// Indices of the members of `s`, or [`Error::NotInFramework`].
    pub fn indices(&self, s: &Extension) -> Result<FixedBitSet> {
        let mut set = FixedBitSet::with_capacity(self.len());
        for a in s {
            let i = self
                .index_of(a)
                .ok_or_else(|| Error::NotInFramework(a.to_string()))?;
            set.insert(i);
        }
        Ok(set)
    }

    pub fn extension_of(&self, set: &FixedBitSet) -> Extension {
        set.ones().map(|i| self.args[i].clone()).collect()
    }

    pub fn extension_of_indices(&self, set: impl IntoIterator<Item = usize>) -> Extension {
        set.into_iter().map(|i| self.args[i].clone()).collect()
    }

    pub(crate) fn range_idx(&self, s: &FixedBitSet) -> FixedBitSet {
        let mut out = s.clone();
        for i in s.ones() {
            for &j in &self.attackees[i] {
                out.insert(j);
            }
        }
        out
    }

    /// Every argument attacked by some member of `s`.
    pub(crate) fn attacked_by_idx(&self, s: &FixedBitSet) -> FixedBitSet {
        let mut attacked = FixedBitSet::with_capacity(self.len());
        for i in s.ones() {
            for &j in &self.attackees[i] {
                attacked.insert(j);
            }
        }
        attacked
    }

    pub(crate) fn defends_idx(&self, s: &FixedBitSet, a: usize) -> bool {
        let attacked = self.attacked_by_idx(s);
        self.attackers[a].iter().all(|&b| attacked.contains(b))
    }

    pub(crate) fn characteristic_idx(&self, s: &FixedBitSet) -> FixedBitSet {
        let attacked = self.attacked_by_idx(s);
        let mut out = FixedBitSet::with_capacity(self.len());
        for a in 0..self.len() {
            if self.attackers[a].iter().all(|&b| attacked.contains(b)) {
                out.insert(a);
            }
        }
        out
    }

    pub(crate) fn is_conflict_free_idx(&self, s: &FixedBitSet) -> bool {
        s.ones()
            .all(|i| self.attackees[i].iter().all(|&j| !s.contains(j)))
    }

    /// `S⁺ = S ∪ {b | S attacks b}`.
    pub fn range(&self, s: &Extension) -> Result<Extension> {
        let set = self.indices(s)?;
        Ok(self.extension_of(&self.range_idx(&set)))
    }

    /// Whether `s` attacks every attacker of `a`.
    pub fn defends(&self, s: &Extension, a: &ArgumentId) -> Result<bool> {
        let set = self.indices(s)?;
        let i = self
            .index_of(a)
            .ok_or_else(|| Error::NotInFramework(a.to_string()))?;
        Ok(self.defends_idx(&set, i))
    }

    /// The characteristic function: every argument defended by `s`.
    pub fn characteristic(&self, s: &Extension) -> Result<Extension> {
        let set = self.indices(s)?;
        Ok(self.extension_of(&self.characteristic_idx(&set)))
    }

    pub fn is_conflict_free(&self, s: &Extension) -> Result<bool> {
        Ok(self.is_conflict_free_idx(&self.indices(s)?))
    }

    /// Whether any argument is decorated (not plain).
    pub fn has_decorated_args(&self) -> Option<&ArgumentId> {
        self.args.iter().find(|a| !a.is_plain())
    }
}

impl PartialEq for Af {
    fn eq(&self, other: &Self) -> bool {
        self.args == other.args && self.attacks == other.attacks
    }
}

impl Eq for Af {}

impl fmt::Debug for Af {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Af({{")?;
        for (i, a) in self.args.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}, {{")?;
        for (k, (a, b)) in self.attacks().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "({a},{b})")?;
        }
        write!(f, "}})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn example1() -> Af {
        Af::from_names(
            &["a", "b", "c", "d", "e"],
            &[("a", "b"), ("c", "b"), ("c", "d"), ("d", "c"), ("d", "e"), ("e", "e")],
        )
    }

    fn ext(names: &[&str]) -> Extension {
        Extension::from_names(names.iter().copied())
    }

    #[test]
    fn make_af_checks_invariants() {
        let single = Af::from_names(&["a"], &[]);
        assert_eq!(single.len(), 1);
        assert_eq!(single.num_attacks(), 0);

        let f = example1();
        assert_eq!(f.len(), 5);
        assert_eq!(f.num_attacks(), 6);

        assert_eq!(
            Af::new(Vec::new(), Vec::new()).unwrap_err(),
            Error::EmptyArguments
        );
        let dangling = Af::new(
            [ArgumentId::named("a")],
            [(ArgumentId::named("a"), ArgumentId::named("b"))],
        );
        assert!(matches!(dangling, Err(Error::DanglingAttack(..))));
    }

    #[test]
    fn decorated_ids_are_injective() {
        let a = ArgumentId::named("a");
        let ids = [
            a.clone(),
            a.prime(),
            a.bar(),
            a.circ(),
            a.bar_circ(),
            a.layer(1),
            a.layer(2),
            a.bar_circ().layer(1),
            ArgumentId::attack(&a, &a),
            ArgumentId::special_t(),
            ArgumentId::special_s(),
            ArgumentId::special_b(),
        ];
        for (i, x) in ids.iter().enumerate() {
            for (j, y) in ids.iter().enumerate() {
                assert_eq!(i == j, x == y, "{x} vs {y}");
            }
        }
        // Same text, different structure.
        let p = ArgumentId::named("x").prime();
        let left = ArgumentId::attack(&p, &ArgumentId::named("n"));
        let right = ArgumentId::attack(&ArgumentId::named("x"), &ArgumentId::named("p").bar());
        assert_eq!(left.as_str(), right.as_str());
        assert_ne!(left, right);
        assert_eq!(a.bar_circ().layer(1).as_str(), "a__no__L1");
        assert_eq!(ArgumentId::attack(&a, &ArgumentId::named("b")).as_str(), "r__a__b");
    }

    #[test]
    fn plain_names_reject_reserved_encoding() {
        assert!(ArgumentId::plain("x_1").is_ok());
        assert!(ArgumentId::plain("a__p").is_err());
        assert!(ArgumentId::plain("__t").is_err());
        assert!(ArgumentId::plain("").is_err());
        assert!(ArgumentId::plain("a-b").is_err());
    }

    #[test]
    fn union_and_subframework() {
        let f = example1();
        assert_eq!(f.union(&f), f);
        let a = Af::from_names(&["a"], &[]);
        let b = Af::from_names(&["b"], &[("b", "b")]);
        assert_eq!(a.union(&b), Af::from_names(&["a", "b"], &[("b", "b")]));

        assert!(f.is_subframework(&f));
        let ab = Af::from_names(&["a", "b"], &[("a", "b")]);
        assert!(a.is_subframework(&ab));
        let aa = Af::from_names(&["a"], &[("a", "a")]);
        assert!(!aa.is_subframework(&ab));
    }

    #[test]
    fn range_examples() {
        let f = example1();
        assert_eq!(f.range(&ext(&["a", "d"])).unwrap(), ext(&["a", "b", "c", "d", "e"]));
        assert_eq!(f.range(&Extension::new()).unwrap(), Extension::new());
        let aa = Af::from_names(&["a"], &[("a", "a")]);
        assert_eq!(aa.range(&ext(&["a"])).unwrap(), ext(&["a"]));
        assert!(matches!(
            f.range(&ext(&["z"])),
            Err(Error::NotInFramework(_))
        ));
    }

    #[test]
    fn defends_examples() {
        let f = example1();
        let a = ArgumentId::named("a");
        let b = ArgumentId::named("b");
        let d = ArgumentId::named("d");
        assert!(f.defends(&Extension::new(), &a).unwrap());
        assert!(!f.defends(&Extension::new(), &b).unwrap());
        assert!(f.defends(&ext(&["d"]), &d).unwrap());
    }

    #[test]
    fn characteristic_examples() {
        let f = example1();
        assert_eq!(f.characteristic(&Extension::new()).unwrap(), ext(&["a"]));
        let aa = Af::from_names(&["a"], &[("a", "a")]);
        assert_eq!(aa.characteristic(&Extension::new()).unwrap(), Extension::new());

        let mut s = Extension::new();
        loop {
            let next = f.characteristic(&s).unwrap();
            if next == s {
                break;
            }
            s = next;
        }
        assert_eq!(s, ext(&["a"]));
    }

    #[test]
    fn extension_canonical_order() {
        let mut v = [ext(&["b"]), ext(&["a", "c"]), ext(&[]), ext(&["a"]), ext(&["a", "b"])];
        v.sort();
        let shown: Vec<String> = v.iter().map(|e| e.to_string()).collect();
        assert_eq!(shown, ["[]", "[a]", "[b]", "[a,b]", "[a,c]"]);
    }
}
