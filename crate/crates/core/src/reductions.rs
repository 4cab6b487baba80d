//! Gadget frameworks from definite Horn theories and 3-CNF formulas,
//! together with the independent oracles (least model, brute-force SAT)
//! they are tested against.

use std::collections::BTreeSet;

use crate::af::{is_valid_plain_name, Af, ArgumentId};
use crate::error::{Error, Result};
use crate::generate::Prng;

/// A definite rule `body → head`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HornRule {
    pub body: BTreeSet<ArgumentId>,
    pub head: ArgumentId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HornTheory {
    atoms: BTreeSet<ArgumentId>,
    rules: Vec<HornRule>,
}

impl HornTheory {
    /// Fails with [`Error::UnknownAtom`] if a rule mentions an undeclared atom.
    pub fn new(atoms: impl IntoIterator<Item = ArgumentId>, rules: Vec<HornRule>) -> Result<Self> {
        let atoms: BTreeSet<ArgumentId> = atoms.into_iter().collect();
        for r in &rules {
            if let Some(a) = r.body.iter().chain([&r.head]).find(|a| !atoms.contains(*a)) {
                return Err(Error::UnknownAtom(a.to_string()));
            }
        }
        Ok(HornTheory { atoms, rules })
    }

    /// Parses one rule per line, `b1 & b2 -> h` or `-> h`. Blank lines and
    /// `#` comments are skipped. The atoms are those mentioned.
    pub fn parse(text: &str) -> Result<Self> {
        let mut atoms = BTreeSet::new();
        let mut rules = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (body, head) = line.split_once("->").ok_or_else(|| Error::Syntax {
                line: line_no,
                message: "expected `body -> head`".to_owned(),
            })?;
            let atom = |s: &str| -> Result<ArgumentId> {
                let s = s.trim();
                if s.is_empty() {
                    return Err(Error::Syntax {
                        line: line_no,
                        message: "empty atom".to_owned(),
                    });
                }
                if !is_valid_plain_name(s) {
                    return Err(Error::ReservedName {
                        line: Some(line_no),
                        name: s.to_owned(),
                    });
                }
                ArgumentId::plain(s)
            };
            let head = atom(head)?;
            let body: BTreeSet<ArgumentId> = if body.trim().is_empty() {
                BTreeSet::new()
            } else {
                body.split('&').map(atom).collect::<Result<_>>()?
            };
            atoms.extend(body.iter().cloned());
            atoms.insert(head.clone());
            rules.push(HornRule { body, head });
        }
        Ok(HornTheory { atoms, rules })
    }

    pub fn atoms(&self) -> &BTreeSet<ArgumentId> {
        &self.atoms
    }

    pub fn rules(&self) -> &[HornRule] {
        &self.rules
    }
}

/// The least model, by firing rules until nothing changes.
pub fn horn_minimal_model(t: &HornTheory) -> BTreeSet<ArgumentId> {
    let mut model = BTreeSet::new();
    loop {
        let before = model.len();
        for r in &t.rules {
            if r.body.is_subset(&model) {
                model.insert(r.head.clone());
            }
        }
        if model.len() == before {
            return model;
        }
    }
}

/// The framework `F_{T,z}`: rule `i` (1-based) becomes `r__i`, atoms keep
/// their names and `__t` is the fresh argument.
///
/// `z` is in the least model iff `__t` is in the grounded extension.
pub fn horn_to_af(t: &HornTheory, z: &ArgumentId) -> Result<Af> {
    if !t.atoms.contains(z) {
        return Err(Error::UnknownAtom(z.to_string()));
    }
    let top = ArgumentId::special_t();
    let rule_args: Vec<ArgumentId> = (1..=t.rules.len() as u32).map(ArgumentId::rule).collect();
    let mut attacks = Vec::new();
    for x in &t.atoms {
        attacks.push((x.clone(), x.clone()));
        attacks.push((top.clone(), x.clone()));
    }
    attacks.push((z.clone(), top.clone()));
    for (r, rule) in rule_args.iter().zip(&t.rules) {
        attacks.push((r.clone(), rule.head.clone()));
        for b in &rule.body {
            attacks.push((b.clone(), r.clone()));
        }
    }
    let args = rule_args
        .into_iter()
        .chain(t.atoms.iter().cloned())
        .chain([top]);
    Af::new(args, attacks)
}

/// A random theory over `p1..pk`, `1 ≤ k ≤ max_atoms`, with at most
/// `max_rules` rules of body size at most 3.
pub fn random_horn(max_atoms: usize, max_rules: usize, seed: u64) -> HornTheory {
    let mut rng = Prng::new(seed);
    let k = 1 + rng.below(max_atoms.max(1) as u64) as usize;
    let atoms: Vec<ArgumentId> = (1..=k).map(|i| ArgumentId::named(&format!("p{i}"))).collect();
    let n_rules = rng.below(max_rules as u64 + 1) as usize;
    let rules = (0..n_rules)
        .map(|_| {
            let body_len = rng.below(4) as usize;
            let body = (0..body_len)
                .map(|_| atoms[rng.below(k as u64) as usize].clone())
                .collect();
            let head = atoms[rng.below(k as u64) as usize].clone();
            HornRule { body, head }
        })
        .collect();
    HornTheory {
        atoms: atoms.into_iter().collect(),
        rules,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Literal {
    /// 0-based variable index.
    pub var: usize,
    pub positive: bool,
}

/// A CNF over variables `x1..xn` with clauses of at most three literals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf3 {
    num_vars: usize,
    clauses: Vec<BTreeSet<Literal>>,
}

/// Largest formula [`brute_sat`] accepts.
pub const SAT_LIMIT: usize = 20;

impl Cnf3 {
    pub fn new(num_vars: usize, clauses: Vec<BTreeSet<Literal>>) -> Result<Self> {
        for c in &clauses {
            if c.len() > 3 {
                return Err(Error::BadParameter(format!(
                    "clause with {} literals; at most 3 allowed",
                    c.len()
                )));
            }
            if let Some(l) = c.iter().find(|l| l.var >= num_vars) {
                return Err(Error::UnknownAtom(format!("x{}", l.var + 1)));
            }
        }
        Ok(Cnf3 { num_vars, clauses })
    }

    /// Builds from signed 1-based DIMACS literals.
    pub fn from_dimacs_clauses(num_vars: usize, clauses: &[&[i32]]) -> Result<Self> {
        let clauses = clauses
            .iter()
            .map(|c| c.iter().map(|&l| literal(l)).collect())
            .collect();
        Cnf3::new(num_vars, clauses)
    }

    /// Parses DIMACS CNF: `c` comment lines, one `p cnf V C` header, and
    /// zero-terminated clauses.
    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut num_vars = None;
        let mut clauses = Vec::new();
        let mut current = BTreeSet::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            let syntax = |message: &str| Error::Syntax {
                line: line_no,
                message: message.to_owned(),
            };
            if let Some(header) = line.strip_prefix('p') {
                let parts: Vec<&str> = header.split_whitespace().collect();
                match parts.as_slice() {
                    ["cnf", v, _] if num_vars.is_none() => {
                        num_vars = Some(v.parse::<usize>().map_err(|_| syntax("bad variable count"))?);
                    }
                    _ => return Err(syntax("expected a single `p cnf <vars> <clauses>` header")),
                }
                continue;
            }
            if num_vars.is_none() {
                return Err(syntax("clause before the `p cnf` header"));
            }
            for tok in line.split_whitespace() {
                let l: i32 = tok.parse().map_err(|_| syntax("bad literal"))?;
                if l == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else {
                    current.insert(literal(l));
                }
            }
        }
        if !current.is_empty() {
            clauses.push(current);
        }
        let num_vars = num_vars.ok_or(Error::Syntax {
            line: 0,
            message: "missing `p cnf` header".to_owned(),
        })?;
        Cnf3::new(num_vars, clauses)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[BTreeSet<Literal>] {
        &self.clauses
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| assignment[l.var] == l.positive))
    }
}

fn literal(l: i32) -> Literal {
    Literal {
        var: l.unsigned_abs() as usize - 1,
        positive: l > 0,
    }
}

/// The argument of variable `i` (0-based): `x{i+1}`.
pub fn var_arg(i: usize) -> ArgumentId {
    ArgumentId::named(&format!("x{}", i + 1))
}

pub fn literal_arg(l: Literal) -> ArgumentId {
    let x = var_arg(l.var);
    if l.positive {
        x
    } else {
        x.bar()
    }
}

/// A satisfying assignment found by enumeration, if any.
pub fn brute_sat_assignment(phi: &Cnf3) -> Result<Option<Vec<bool>>> {
    if phi.num_vars > SAT_LIMIT {
        return Err(Error::TooLarge(format!(
            "{} variables; brute-force SAT stops at {SAT_LIMIT}",
            phi.num_vars
        )));
    }
    for mask in 0u32..1 << phi.num_vars {
        let assignment: Vec<bool> = (0..phi.num_vars).map(|i| mask >> i & 1 == 1).collect();
        if phi.is_satisfied_by(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

pub fn brute_sat(phi: &Cnf3) -> Result<bool> {
    Ok(brute_sat_assignment(phi)?.is_some())
}

/// The framework `F_φ`: literals `x1`/`x1__n`, clauses `c__i` (1-based),
/// and the fresh `__s`, `__t`, `__b`.
///
/// φ is satisfiable iff `{__s}` is not a stage extension.
pub fn cnf_to_af(phi: &Cnf3) -> Af {
    let (s, t, b) = (ArgumentId::special_s(), ArgumentId::special_t(), ArgumentId::special_b());
    let mut args = Vec::new();
    let mut attacks = Vec::new();
    for i in 0..phi.num_vars {
        let (x, xn) = (var_arg(i), var_arg(i).bar());
        attacks.push((x.clone(), xn.clone()));
        attacks.push((xn.clone(), x.clone()));
        args.push(x);
        args.push(xn);
    }
    for (i, c) in phi.clauses.iter().enumerate() {
        let ca = ArgumentId::clause(i as u32 + 1);
        for &l in c {
            attacks.push((literal_arg(l), ca.clone()));
        }
        attacks.push((ca.clone(), t.clone()));
        args.push(ca);
    }
    args.push(t.clone());
    for y in &args {
        attacks.push((s.clone(), y.clone()));
        attacks.push((y.clone(), s.clone()));
    }
    attacks.push((t.clone(), b.clone()));
    attacks.push((b.clone(), b.clone()));
    args.push(s);
    args.push(b);
    Af::new(args, attacks).expect("gadget attacks stay inside its arguments")
}

/// A random formula with `1..=max_vars` variables and `0..=max_clauses`
/// clauses of one to three literals over distinct variables.
pub fn random_cnf3(max_vars: usize, max_clauses: usize, seed: u64) -> Cnf3 {
    let mut rng = Prng::new(seed);
    let n = 1 + rng.below(max_vars.max(1) as u64) as usize;
    let m = rng.below(max_clauses as u64 + 1) as usize;
    let clauses = (0..m)
        .map(|_| {
            let len = 1 + rng.below(3.min(n) as u64) as usize;
            let mut vars = BTreeSet::new();
            while vars.len() < len {
                vars.insert(rng.below(n as u64) as usize);
            }
            vars.into_iter()
                .map(|var| Literal {
                    var,
                    positive: rng.bernoulli(0.5),
                })
                .collect()
        })
        .collect();
    Cnf3 { num_vars: n, clauses }
}

/// The formula with clauses `{x1,x2,x3}`, `{¬x2,¬x3,¬x4}`, `{¬x1,x2,x4}`.
pub fn four_variable_example() -> Cnf3 {
    Cnf3::from_dimacs_clauses(4, &[&[1, 2, 3], &[-2, -3, -4], &[-1, 2, 4]])
        .expect("well-formed clauses")
}
