//! Backtracking search over in/out/undecided labels with propagation.
//!
//! The search assigns each argument `In` or `Out`. Counters kept per
//! argument (attackers already in, attackers still undecided, members it
//! attacks, ...) let every constraint be re-checked locally after an
//! assignment and turn "exactly one way left" situations into forced
//! assignments. Every complete labelling is re-validated against the
//! definitions before it is reported.

use fixedbitset::FixedBitSet;

use crate::af::Af;

use super::{ExtensionSet, SemanticsId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum Base {
    ConflictFree,
    Admissible,
    Complete,
}

/// Arguments that must end up in the range of a solution.
#[derive(Debug, Clone)]
pub(crate) enum Required {
    Nothing,
    Everything,
    These(FixedBitSet),
}

/// What the search enumerates.
#[derive(Debug, Clone)]
pub(crate) struct Query {
    pub base: Base,
    pub required_range: Required,
    /// Only ⊆-maximal conflict-free sets.
    pub naive: bool,
    pub forced_in: Option<FixedBitSet>,
    pub limit: Option<usize>,
}

impl Query {
    pub fn new(base: Base) -> Self {
        Query {
            base,
            required_range: Required::Nothing,
            naive: false,
            forced_in: None,
            limit: None,
        }
    }

    pub fn stable() -> Self {
        let mut q = Query::new(Base::ConflictFree);
        q.required_range = Required::Everything;
        q
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Label {
    Undec,
    In,
    Out,
}

struct Search<'a> {
    af: &'a Af,
    query: &'a Query,
    self_attacking: Vec<bool>,
    neighbours: Vec<Vec<usize>>,
    required: Vec<bool>,
    order: Vec<usize>,

    label: Vec<Label>,
    in_attackers: Vec<u32>,
    undec_attackers: Vec<u32>,
    in_victims: Vec<u32>,
    unattacked_attackers: Vec<u32>,
    in_neighbours: Vec<u32>,
    undec_neighbours: Vec<u32>,

    trail: Vec<usize>,
    queue: Vec<usize>,
    solutions: Vec<FixedBitSet>,
}

impl<'a> Search<'a> {
    fn new(af: &'a Af, query: &'a Query) -> Self {
        let n = af.len();
        let self_attacking: Vec<bool> = (0..n).map(|i| af.attacks_idx(i, i)).collect();
        let mut neighbours = vec![Vec::new(); n];
        for &(i, j) in af.attack_indices() {
            if i != j {
                neighbours[i].push(j);
                neighbours[j].push(i);
            }
        }
        for list in &mut neighbours {
            list.sort_unstable();
            list.dedup();
        }
        let required = match &query.required_range {
            Required::Nothing => vec![false; n],
            Required::Everything => vec![true; n],
            Required::These(set) => (0..n).map(|i| set.contains(i)).collect(),
        };
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| {
            std::cmp::Reverse(af.attackers_of(i).len() + af.attackees_of(i).len())
        });
        let undec_attackers = (0..n).map(|i| af.attackers_of(i).len() as u32).collect();
        let unattacked_attackers = (0..n).map(|i| af.attackers_of(i).len() as u32).collect();
        let undec_neighbours = neighbours.iter().map(|l| l.len() as u32).collect();
        Search {
            af,
            query,
            self_attacking,
            neighbours,
            required,
            order,
            label: vec![Label::Undec; n],
            in_attackers: vec![0; n],
            undec_attackers,
            in_victims: vec![0; n],
            unattacked_attackers,
            in_neighbours: vec![0; n],
            undec_neighbours,
            trail: Vec::with_capacity(n),
            queue: Vec::new(),
            solutions: Vec::new(),
        }
    }

    fn assign(&mut self, x: usize, l: Label) {
        debug_assert_eq!(self.label[x], Label::Undec);
        self.label[x] = l;
        self.trail.push(x);
        let af = self.af;
        for &y in af.attackees_of(x) {
            self.undec_attackers[y] -= 1;
            if l == Label::In {
                self.in_attackers[y] += 1;
                if self.in_attackers[y] == 1 {
                    for &z in af.attackees_of(y) {
                        self.unattacked_attackers[z] -= 1;
                        self.queue.push(z);
                    }
                }
            }
            self.queue.push(y);
        }
        if l == Label::In {
            for &b in af.attackers_of(x) {
                self.in_victims[b] += 1;
                self.queue.push(b);
            }
        }
        for k in 0..self.neighbours[x].len() {
            let y = self.neighbours[x][k];
            self.undec_neighbours[y] -= 1;
            if l == Label::In {
                self.in_neighbours[y] += 1;
            }
            self.queue.push(y);
        }
        self.queue.push(x);
    }

    fn unassign(&mut self, x: usize) {
        let l = self.label[x];
        self.label[x] = Label::Undec;
        let af = self.af;
        for &y in af.attackees_of(x) {
            self.undec_attackers[y] += 1;
            if l == Label::In {
                if self.in_attackers[y] == 1 {
                    for &z in af.attackees_of(y) {
                        self.unattacked_attackers[z] += 1;
                    }
                }
                self.in_attackers[y] -= 1;
            }
        }
        if l == Label::In {
            for &b in af.attackers_of(x) {
                self.in_victims[b] -= 1;
            }
        }
        for k in 0..self.neighbours[x].len() {
            let y = self.neighbours[x][k];
            self.undec_neighbours[y] += 1;
            if l == Label::In {
                self.in_neighbours[y] -= 1;
            }
        }
    }

    fn backtrack_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().expect("trail above mark");
            self.unassign(x);
        }
    }

    fn undecided_attacker(&self, y: usize) -> usize {
        *self
            .af
            .attackers_of(y)
            .iter()
            .find(|&&b| self.label[b] == Label::Undec)
            .expect("counter says one attacker is undecided")
    }

    fn undecided_neighbour(&self, y: usize) -> usize {
        *self.neighbours[y]
            .iter()
            .find(|&&b| self.label[b] == Label::Undec)
            .expect("counter says one neighbour is undecided")
    }

    /// Re-checks the constraints around `y`. Returns `false` on conflict.
    fn check(&mut self, y: usize) -> bool {
        let l = self.label[y];
        if l == Label::In {
            if self.self_attacking[y] || self.in_neighbours[y] > 0 {
                return false;
            }
            for k in 0..self.neighbours[y].len() {
                let z = self.neighbours[y][k];
                if self.label[z] == Label::Undec {
                    self.assign(z, Label::Out);
                }
            }
        }

        let must_be_attacked = (l == Label::Out && self.required[y])
            || (self.query.base >= Base::Admissible && self.in_victims[y] > 0);
        if must_be_attacked && self.in_attackers[y] == 0 {
            match self.undec_attackers[y] {
                0 => return false,
                1 => {
                    let z = self.undecided_attacker(y);
                    self.assign(z, Label::In);
                }
                _ => {}
            }
        }

        if self.query.base == Base::Complete && self.unattacked_attackers[y] == 0 {
            match l {
                Label::Out => return false,
                Label::Undec => self.assign(y, Label::In),
                Label::In => {}
            }
        }

        if self.query.naive
            && self.label[y] == Label::Out
            && !self.self_attacking[y]
            && self.in_neighbours[y] == 0
        {
            match self.undec_neighbours[y] {
                0 => return false,
                1 => {
                    let z = self.undecided_neighbour(y);
                    self.assign(z, Label::In);
                }
                _ => {}
            }
        }
        true
    }

    fn propagate(&mut self) -> bool {
        while let Some(y) = self.queue.pop() {
            if !self.check(y) {
                self.queue.clear();
                return false;
            }
        }
        true
    }

    fn current(&self) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.label.len());
        for (i, &l) in self.label.iter().enumerate() {
            if l == Label::In {
                s.insert(i);
            }
        }
        s
    }

    fn valid(&self, s: &FixedBitSet) -> bool {
        let af = self.af;
        if !af.is_conflict_free_idx(s) {
            return false;
        }
        let attacked = af.attacked_by_idx(s);
        if self.query.base >= Base::Admissible
            && !s
                .ones()
                .all(|a| af.attackers_of(a).iter().all(|&b| attacked.contains(b)))
        {
            return false;
        }
        if self.query.base == Base::Complete && af.characteristic_idx(s) != *s {
            return false;
        }
        if (0..af.len()).any(|i| self.required[i] && !s.contains(i) && !attacked.contains(i)) {
            return false;
        }
        if let Some(forced) = &self.query.forced_in {
            if !forced.is_subset(s) {
                return false;
            }
        }
        if self.query.naive {
            let maximal = (0..af.len()).all(|i| {
                s.contains(i)
                    || self.self_attacking[i]
                    || attacked.contains(i)
                    || af.attackees_of(i).iter().any(|&j| s.contains(j))
            });
            if !maximal {
                return false;
            }
        }
        true
    }

    fn done(&self) -> bool {
        self.query.limit.is_some_and(|k| self.solutions.len() >= k)
    }

    fn descend(&mut self, cursor: usize) {
        let mut cursor = cursor;
        while cursor < self.order.len() && self.label[self.order[cursor]] != Label::Undec {
            cursor += 1;
        }
        if cursor == self.order.len() {
            let s = self.current();
            if self.valid(&s) {
                self.solutions.push(s);
            }
            return;
        }
        let x = self.order[cursor];
        for l in [Label::In, Label::Out] {
            if self.done() {
                return;
            }
            let mark = self.trail.len();
            self.assign(x, l);
            if self.propagate() {
                self.descend(cursor + 1);
            }
            self.backtrack_to(mark);
        }
    }

    fn run(mut self) -> Vec<FixedBitSet> {
        let n = self.af.len();
        for i in 0..n {
            if self.self_attacking[i] {
                self.assign(i, Label::Out);
            }
        }
        if let Some(forced) = self.query.forced_in.clone() {
            for i in forced.ones() {
                match self.label[i] {
                    Label::Undec => self.assign(i, Label::In),
                    Label::Out => return Vec::new(),
                    Label::In => {}
                }
                if !self.propagate() {
                    return Vec::new();
                }
            }
        }
        self.queue.extend(0..n);
        if !self.propagate() {
            return Vec::new();
        }
        self.descend(0);
        self.solutions
    }
}

/// Runs a query and returns the solutions as index sets.
pub(crate) fn search(af: &Af, query: &Query) -> Vec<FixedBitSet> {
    Search::new(af, query).run()
}

pub(crate) fn exists(af: &Af, mut query: Query) -> bool {
    query.limit = Some(1);
    !search(af, &query).is_empty()
}

/// Members of `family` whose key is not strictly contained in another key.
fn maximal_by(family: Vec<FixedBitSet>, key: impl Fn(&FixedBitSet) -> FixedBitSet) -> Vec<FixedBitSet> {
    let mut keyed: Vec<(FixedBitSet, FixedBitSet)> =
        family.into_iter().map(|s| (key(&s), s)).collect();
    keyed.sort_by_key(|(k, _)| std::cmp::Reverse(k.count_ones(..)));
    let mut maximal_keys: Vec<FixedBitSet> = Vec::new();
    let mut out = Vec::new();
    for (k, s) in keyed {
        let dominated = maximal_keys
            .iter()
            .any(|m| k.is_subset(m) && *m != k);
        if !dominated {
            if !maximal_keys.contains(&k) {
                maximal_keys.push(k);
            }
            out.push(s);
        }
    }
    out
}

pub(crate) fn grounded_idx(af: &Af) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(af.len());
    loop {
        let next = af.characteristic_idx(&s);
        if next == s {
            return s;
        }
        s = next;
    }
}

pub(crate) fn index_sets(af: &Af, sigma: SemanticsId) -> Vec<FixedBitSet> {
    match sigma {
        SemanticsId::Grd => vec![grounded_idx(af)],
        SemanticsId::Adm => search(af, &Query::new(Base::Admissible)),
        SemanticsId::Com => search(af, &Query::new(Base::Complete)),
        SemanticsId::Stb => search(af, &Query::stable()),
        SemanticsId::Prf => maximal_by(search(af, &Query::new(Base::Complete)), |s| s.clone()),
        SemanticsId::Sem => {
            let stable = search(af, &Query::stable());
            if !stable.is_empty() {
                return stable;
            }
            maximal_by(search(af, &Query::new(Base::Complete)), |s| af.range_idx(s))
        }
        SemanticsId::Stg => {
            let stable = search(af, &Query::stable());
            if !stable.is_empty() {
                return stable;
            }
            let mut q = Query::new(Base::ConflictFree);
            q.naive = true;
            maximal_by(search(af, &q), |s| af.range_idx(s))
        }
    }
}

/// σ(F) computed by the backtracking engine.
pub fn solve(af: &Af, sigma: SemanticsId) -> ExtensionSet {
    ExtensionSet::from_index_sets(af, index_sets(af, sigma).iter().map(|s| s.ones().collect::<Vec<_>>()))
}

/// Stable extensions by backtracking.
pub fn stable_backtracking(af: &Af) -> ExtensionSet {
    solve(af, SemanticsId::Stb)
}

/// ⊆-maximal conflict-free sets.
pub fn naive_sets(af: &Af) -> ExtensionSet {
    let mut q = Query::new(Base::ConflictFree);
    q.naive = true;
    ExtensionSet::from_index_sets(af, search(af, &q).iter().map(|s| s.ones().collect::<Vec<_>>()))
}
