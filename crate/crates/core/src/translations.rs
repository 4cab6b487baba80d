//! The eight translations between semantics, their remainder sets, and the
//! projection that filters fresh arguments out of target extensions.
//!
//! Fresh arguments are always decorated [`ArgumentId`]s, so a translation
//! never needs to rename anything. `tr8` numbers its layers from the final
//! one: the final layer keeps the original identifiers, the layer before
//! it is `L2`, and so on, while the fixpoint-seeding `ā°` arguments of the
//! final layer are `L1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::af::{Af, ArgKind, ArgumentId, Extension};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TranslationId {
    Tr1,
    Tr2,
    Tr3,
    Tr4,
    Tr5,
    Tr6,
    Tr7,
    Tr8,
}

impl TranslationId {
    pub const ALL: [TranslationId; 8] = [
        TranslationId::Tr1,
        TranslationId::Tr2,
        TranslationId::Tr3,
        TranslationId::Tr4,
        TranslationId::Tr5,
        TranslationId::Tr6,
        TranslationId::Tr7,
        TranslationId::Tr8,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TranslationId::Tr1 => "tr1",
            TranslationId::Tr2 => "tr2",
            TranslationId::Tr3 => "tr3",
            TranslationId::Tr4 => "tr4",
            TranslationId::Tr5 => "tr5",
            TranslationId::Tr6 => "tr6",
            TranslationId::Tr7 => "tr7",
            TranslationId::Tr8 => "tr8",
        }
    }

    /// Whether the translation is proven modular (tr1, tr3, tr5, tr7).
    pub fn is_modular(self) -> bool {
        matches!(
            self,
            TranslationId::Tr1 | TranslationId::Tr3 | TranslationId::Tr5 | TranslationId::Tr7
        )
    }

    /// Whether the translation is embedding (all but tr2).
    pub fn is_embedding(self) -> bool {
        self != TranslationId::Tr2
    }

    /// Remainder sets, independent of the input.
    pub fn remainder(self) -> Vec<Extension> {
        match self {
            TranslationId::Tr3 => vec![std::iter::once(ArgumentId::special_t()).collect()],
            TranslationId::Tr4 => vec![Extension::new()],
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for TranslationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TranslationId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TranslationId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::BadParameter(format!("unknown translation `{s}`")))
    }
}

/// A single translation, the concatenation `outer ∘ inner`, or the
/// identity.
///
/// Written `tr4.tr8` for `Tr₄ ∘ Tr₈`: the inner translation is applied
/// first. The identity is written `id`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    Identity,
    Single(TranslationId),
    Composite {
        outer: TranslationId,
        inner: TranslationId,
    },
}

impl Route {
    pub fn remainder(self) -> Vec<Extension> {
        match self {
            Route::Identity => Vec::new(),
            Route::Single(t) => t.remainder(),
            Route::Composite { outer, .. } => outer.remainder(),
        }
    }

    pub fn is_modular(self) -> bool {
        match self {
            Route::Identity => true,
            Route::Single(t) => t.is_modular(),
            Route::Composite { outer, inner } => outer.is_modular() && inner.is_modular(),
        }
    }

    pub fn is_embedding(self) -> bool {
        match self {
            Route::Identity => true,
            Route::Single(t) => t.is_embedding(),
            Route::Composite { outer, inner } => outer.is_embedding() && inner.is_embedding(),
        }
    }
}

impl From<TranslationId> for Route {
    fn from(t: TranslationId) -> Self {
        Route::Single(t)
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Route::Identity => f.write_str("id"),
            Route::Single(t) => write!(f, "{t}"),
            Route::Composite { outer, inner } => write!(f, "{outer}.{inner}"),
        }
    }
}

impl FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.split_once('.') {
            None if s == "id" => Ok(Route::Identity),
            None => Ok(Route::Single(s.parse()?)),
            Some((outer, inner)) => Ok(Route::Composite {
                outer: outer.parse()?,
                inner: inner.parse()?,
            }),
        }
    }
}

impl Serialize for Route {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Route {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TranslateOptions {
    /// Number of layers for `tr8`; `None` means `⌈|A|/2⌉`.
    pub tr8_layers: Option<u32>,
}

/// The result of translating a framework.
#[derive(Debug, Clone)]
pub struct TranslationOutput {
    pub target: Af,
    pub original_args: BTreeSet<ArgumentId>,
    pub remainder: Vec<Extension>,
    pub route: Route,
}

impl TranslationOutput {
    /// `E ∩ A_F`; fails if `e` is not a set of target arguments.
    pub fn project(&self, e: &Extension) -> Result<Extension> {
        project(e, self)
    }

    /// Provenance of every fresh argument of the target.
    pub fn arg_map(&self) -> Vec<Provenance> {
        self.target
            .args()
            .iter()
            .filter(|a| !self.original_args.contains(*a))
            .map(Provenance::of)
            .collect()
    }
}

/// Where a fresh argument comes from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub arg: String,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source_arg: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source_attack: Option<(String, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub layer: Option<u32>,
}

impl Provenance {
    fn of(a: &ArgumentId) -> Self {
        let mut p = Provenance {
            arg: a.to_string(),
            kind: String::new(),
            source_arg: None,
            source_attack: None,
            layer: None,
        };
        let (kind, source) = match a.kind() {
            ArgKind::Plain(_) => ("plain", None),
            ArgKind::Prime(x) => ("prime", Some(x)),
            ArgKind::Bar(x) => ("bar", Some(x)),
            ArgKind::Circ(x) => ("circ", Some(x)),
            ArgKind::BarCirc(x) => ("barcirc", Some(x)),
            ArgKind::Layer(x, i) => {
                p.layer = Some(*i);
                ("layer", Some(x))
            }
            ArgKind::Attack(x, y) => {
                p.source_attack = Some((x.to_string(), y.to_string()));
                ("attack", None)
            }
            ArgKind::Rule(_) => ("rule", None),
            ArgKind::Clause(_) => ("clause", None),
            ArgKind::SpecialT => ("special-t", None),
            ArgKind::SpecialS => ("special-s", None),
            ArgKind::SpecialB => ("special-b", None),
        };
        p.kind = kind.to_owned();
        p.source_arg = source.map(|x| x.to_string());
        p
    }
}

#[derive(Default)]
struct Builder {
    args: Vec<ArgumentId>,
    attacks: Vec<(ArgumentId, ArgumentId)>,
}

impl Builder {
    fn from_af(f: &Af) -> Self {
        Builder {
            args: f.args().to_vec(),
            attacks: f.attacks().map(|(a, b)| (a.clone(), b.clone())).collect(),
        }
    }

    fn arg(&mut self, a: ArgumentId) {
        self.args.push(a);
    }

    fn att(&mut self, a: &ArgumentId, b: &ArgumentId) {
        self.attacks.push((a.clone(), b.clone()));
    }

    fn build(self) -> Af {
        Af::new(self.args, self.attacks).expect("translations only attack their own arguments")
    }
}

fn attack_pairs(f: &Af) -> Vec<(ArgumentId, ArgumentId)> {
    f.attacks().map(|(a, b)| (a.clone(), b.clone())).collect()
}

fn tr1(f: &Af) -> Af {
    let mut out = Builder::from_af(f);
    for a in f.args() {
        let ap = a.prime();
        out.att(a, &ap);
        out.att(&ap, a);
        out.att(&ap, &ap);
        out.arg(ap);
    }
    out.build()
}

fn tr2(f: &Af) -> Af {
    let mut out = Builder::from_af(f);
    for (a, b) in attack_pairs(f) {
        out.att(&b, &a);
        out.att(&a, &b.prime());
    }
    for b in f.args() {
        if f.has_attack(b, b) {
            for a in f.args() {
                out.att(a, b);
            }
        }
    }
    for a in f.args() {
        let ap = a.prime();
        out.att(a, &ap);
        out.att(&ap, &ap);
        out.arg(ap);
    }
    out.build()
}

fn tr3(f: &Af) -> Af {
    let mut out = Builder::from_af(f);
    let t = ArgumentId::special_t();
    for a in f.args() {
        out.att(&t, a);
        out.att(a, &t);
    }
    out.arg(t);
    out.build()
}

fn tr4(f: &Af) -> Af {
    let mut out = Builder::from_af(f);
    let primes: Vec<ArgumentId> = f.args().iter().map(ArgumentId::prime).collect();
    for bp in &primes {
        for a in f.args() {
            out.att(bp, a);
        }
    }
    for (a, ap) in f.args().iter().zip(&primes) {
        out.att(ap, ap);
        out.att(a, ap);
    }
    for (a, b) in attack_pairs(f) {
        out.att(&a, &b.prime());
    }
    out.args.extend(primes);
    out.build()
}

fn tr5(f: &Af) -> Af {
    let mut out = Builder::from_af(f);
    for a in f.args() {
        let (ab, ap) = (a.bar(), a.prime());
        out.att(a, &ab);
        out.att(&ab, a);
        out.att(a, &ap);
        out.att(&ap, &ap);
        out.arg(ab);
        out.arg(ap);
    }
    for (a, b) in attack_pairs(f) {
        out.att(&a, &b.prime());
    }
    out.build()
}

fn tr6(f: &Af) -> Af {
    let mut out = Builder::from_af(f);
    for a in f.args() {
        let ab = a.bar();
        out.att(a, &ab);
        out.att(&ab, a);
        out.arg(ab);
    }
    for (y, a) in attack_pairs(f) {
        let r = ArgumentId::attack(&y, &a);
        out.att(&r, &r);
        out.att(&a.bar(), &r);
        // Every argument that attacks the attacker y defends a against r.
        let yi = f.index_of(&y).expect("attack endpoint");
        for &z in f.attackers_of(yi) {
            out.att(f.arg(z), &r);
        }
        out.arg(r);
    }
    out.build()
}

fn tr7(f: &Af) -> Af {
    let mut out = Builder::from_af(f);
    for a in f.args() {
        let (ab, ac, abc, ap) = (a.bar(), a.circ(), a.bar_circ(), a.prime());
        out.att(&ap, &ap);
        out.att(a, &ab);
        out.att(&ab, a);
        out.att(&abc, &ac);
        out.att(a, &ap);
        out.args.extend([ab, ac, abc, ap]);
    }
    for (a, b) in attack_pairs(f) {
        out.att(&a, &b.bar_circ());
        out.att(&a.bar_circ(), &b.prime());
    }
    for (b, a) in attack_pairs(f) {
        let r = ArgumentId::attack(&b, &a);
        out.att(&r, &r);
        out.att(&a.bar(), &r);
        out.att(&b.circ(), &r);
        out.arg(r);
    }
    out.build()
}

/// `⌈n/2⌉`, at least one.
pub fn tr8_default_layers(n: usize) -> u32 {
    n.div_ceil(2).max(1) as u32
}

fn tr8(f: &Af, layers: u32) -> Af {
    let l = layers;
    // Layer i of the fixpoint simulation, 1 ≤ i ≤ l, is tagged l - i + 1.
    let tag = |i: u32| l - i + 1;
    let in_arg = |a: &ArgumentId, i: u32| {
        if i == l {
            a.clone()
        } else {
            a.layer(tag(i))
        }
    };
    let not_attacked = |a: &ArgumentId, i: u32| a.bar_circ().layer(tag(i));

    let mut out = Builder::default();
    for i in 1..=l {
        for a in f.args() {
            out.arg(in_arg(a, i));
            out.arg(not_attacked(a, i));
        }
    }
    for (a, b) in attack_pairs(f) {
        out.att(&a, &b);
        for i in 1..=l {
            out.att(&not_attacked(&a, i), &in_arg(&b, i));
        }
        for i in 1..l {
            out.att(&in_arg(&a, i), &not_attacked(&b, i + 1));
        }
    }
    out.build()
}

fn apply(f: &Af, t: TranslationId, opts: &TranslateOptions) -> Af {
    match t {
        TranslationId::Tr1 => tr1(f),
        TranslationId::Tr2 => tr2(f),
        TranslationId::Tr3 => tr3(f),
        TranslationId::Tr4 => tr4(f),
        TranslationId::Tr5 => tr5(f),
        TranslationId::Tr6 => tr6(f),
        TranslationId::Tr7 => tr7(f),
        TranslationId::Tr8 => tr8(
            f,
            opts.tr8_layers
                .unwrap_or_else(|| tr8_default_layers(f.len()))
                .max(1),
        ),
    }
}

/// Translates `f`, which must contain only plain arguments.
pub fn translate(f: &Af, t: TranslationId) -> Result<TranslationOutput> {
    translate_route(f, Route::Single(t), &TranslateOptions::default())
}

/// Translates `f` along a single or composite route.
///
/// For `outer ∘ inner` the outer translation is applied to the inner
/// output as is; its fresh arguments decorate the already decorated ones.
pub fn translate_route(f: &Af, route: Route, opts: &TranslateOptions) -> Result<TranslationOutput> {
    if let Some(a) = f.has_decorated_args() {
        return Err(Error::ReservedName {
            line: None,
            name: a.to_string(),
        });
    }
    let target = match route {
        Route::Identity => f.clone(),
        Route::Single(t) => apply(f, t, opts),
        Route::Composite { outer, inner } => apply(&apply(f, inner, opts), outer, opts),
    };
    Ok(TranslationOutput {
        target,
        original_args: f.args().iter().cloned().collect(),
        remainder: route.remainder(),
        route,
    })
}

/// `E ∩ A_F` for a target extension `e`.
pub fn project(e: &Extension, out: &TranslationOutput) -> Result<Extension> {
    if let Some(a) = e.iter().find(|a| !out.target.contains(a)) {
        return Err(Error::NotInFramework(a.to_string()));
    }
    Ok(e.filtered(|a| out.original_args.contains(a)))
}
