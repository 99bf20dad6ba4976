//! Executable lemma checks over a single multiplicative lattice.
//!
//! Every check quantifies exhaustively over the elements of the instance.
//! Failures carry the first violating tuple, rendered with element labels.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mult::MultiplicativeLattice;
use crate::set::ElementSet;
use crate::xclass::{self, MClosedSet, XMultClosedSet};

/// Outcome of one check on one scope (an X-set name, or `lattice`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub scope: String,
    pub passed: bool,
    /// Counterexample on failure; for informational checks, what was found.
    pub detail: Option<String>,
}

/// Two X-elements whose join is not an X-element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JoinFailure {
    pub set: String,
    pub first: String,
    pub second: String,
    pub join: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub checks: Vec<CheckResult>,
    pub join_failures: Vec<JoinFailure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

type Check = std::result::Result<(), String>;

/// The three standard sets, named `r`, `n` and `j`.
pub fn standard_sets(m: &MultiplicativeLattice) -> Result<Vec<(String, MClosedSet)>> {
    Ok(vec![
        ("r".to_string(), xclass::r_set(m)?),
        ("n".to_string(), xclass::n_set(m)?),
        ("j".to_string(), xclass::j_set(m)?),
    ])
}

/// Runs every check for each set in `sets` plus the r/n/J sets.
pub fn lemma_suite(m: &MultiplicativeLattice, sets: &[(String, MClosedSet)]) -> Result<SuiteReport> {
    if m.size() == 1 {
        return Err(Error::DegenerateLattice);
    }
    let mut all: Vec<(String, MClosedSet)> = sets.to_vec();
    all.extend(standard_sets(m)?);

    let ctx = Ctx::new(m);
    let mut checks = Vec::new();
    let mut join_failures = Vec::new();

    for (name, x) in &all {
        let xs = xclass::x_elements(m, x);
        record(&mut checks, "L1", name, ctx.l1(x, &xs));
        record(&mut checks, "L2", name, ctx.l2(x, &xs, &all));
        record(&mut checks, "L5", name, ctx.l5(&xs));
        let found = ctx.join_failure(&xs);
        if let Some((a, b, j)) = found {
            join_failures.push(JoinFailure {
                set: name.clone(),
                first: m.label(a).to_string(),
                second: m.label(b).to_string(),
                join: m.label(j).to_string(),
            });
        }
        // Informational: joins of X-elements need not be X-elements.
        checks.push(CheckResult {
            id: "L6".to_string(),
            scope: name.clone(),
            passed: true,
            detail: found.map(|(a, b, j)| {
                format!("{} ∨ {} = {} is not an X-element", m.label(a), m.label(b), m.label(j))
            }),
        });
        record(&mut checks, "L7", name, ctx.l7(x, &xs));
        record(&mut checks, "L8", name, ctx.l8(&xs));
        record(&mut checks, "L13", name, ctx.l13(x, &xs));
        record(&mut checks, "L14", name, ctx.l14(x, &xs));
        record(&mut checks, "L15", name, ctx.l15(x, &xs));
        record(&mut checks, "T-avoid", name, ctx.maximal_avoiding(x));
    }

    for (id, outcome) in [
        ("L3", ctx.l3()),
        ("L4", ctx.l4()),
        ("L9", ctx.l9()),
        ("L10", ctx.l10()),
        ("L11", ctx.l11()),
        ("L12", ctx.l12()),
        ("L16", ctx.l16()),
    ] {
        record(&mut checks, id, "lattice", outcome);
    }

    Ok(SuiteReport {
        checks,
        join_failures,
    })
}

fn record(checks: &mut Vec<CheckResult>, id: &str, scope: &str, outcome: Check) {
    checks.push(CheckResult {
        id: id.to_string(),
        scope: scope.to_string(),
        passed: outcome.is_ok(),
        detail: outcome.err(),
    });
}

struct Ctx<'a> {
    m: &'a MultiplicativeLattice,
    max: ElementSet,
}

fn ensure(cond: bool, detail: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(detail())
    }
}

impl<'a> Ctx<'a> {
    fn new(m: &'a MultiplicativeLattice) -> Self {
        Self {
            m,
            max: m.max_elements().expect("nondegenerate"),
        }
    }

    fn l(&self, x: usize) -> &str {
        self.m.label(x)
    }

    fn labels(&self, set: &ElementSet) -> String {
        let parts: Vec<&str> = set.iter().map(|x| self.l(x)).collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// X-elements lie inside X; for `(i] = X`, X-element ⟺ prime.
    fn l1(&self, x: &MClosedSet, xs: &ElementSet) -> Check {
        let m = self.m;
        for i in xs {
            ensure(m.down_set(i).is_subset(x.members()), || {
                format!("X-element {} has (i] ⊄ X", self.l(i))
            })?;
        }
        for i in m.elements().filter(|&i| m.down_set(i) == x.members()) {
            ensure(xs.contains(i) == m.is_prime(i), || {
                format!(
                    "(i] = X for i = {}: X-element {} but prime {}",
                    self.l(i),
                    xs.contains(i),
                    m.is_prime(i)
                )
            })?;
        }
        Ok(())
    }

    /// Enlarging X keeps X-elements.
    fn l2(&self, x: &MClosedSet, xs: &ElementSet, all: &[(String, MClosedSet)]) -> Check {
        let m = self.m;
        let whole = MClosedSet::new(m, m.all()).expect("L is M-closed");
        let supersets = all
            .iter()
            .map(|(n, s)| (n.as_str(), s))
            .chain(std::iter::once(("L", &whole)))
            .filter(|(_, s)| x.members().is_subset(s.members()));
        for (name, bigger) in supersets {
            let big_xs = xclass::x_elements(m, bigger);
            ensure(xs.is_subset(&big_xs), || {
                let lost = xs.difference(&big_xs);
                format!("X-elements {} are not {name}-elements", self.labels(&lost))
            })?;
        }
        Ok(())
    }

    /// Meets of nonempty families of X-elements are X-elements.
    fn l5(&self, xs: &ElementSet) -> Check {
        let m = self.m;
        let list: Vec<usize> = xs.iter().collect();
        if list.len() <= 12 {
            for mask in 1u32..(1 << list.len()) {
                let family = list
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask & (1 << k) != 0)
                    .map(|(_, &i)| i);
                let meet = m.big_meet(family);
                ensure(xs.contains(meet), || {
                    format!("meet {} of a family of X-elements is not one", self.l(meet))
                })?;
            }
        } else {
            for &a in &list {
                for &b in &list {
                    for &c in &list {
                        let meet = m.meet(m.meet(a, b), c);
                        ensure(xs.contains(meet), || {
                            format!(
                                "{} ∧ {} ∧ {} = {} is not an X-element",
                                self.l(a),
                                self.l(b),
                                self.l(c),
                                self.l(meet)
                            )
                        })?;
                    }
                }
            }
        }
        Ok(())
    }

    fn join_failure(&self, xs: &ElementSet) -> Option<(usize, usize, usize)> {
        for a in xs {
            for b in xs.iter().filter(|&b| b > a) {
                let j = self.m.join(a, b);
                if !xs.contains(j) {
                    return Some((a, b, j));
                }
            }
        }
        None
    }

    /// Residual characterizations.
    fn l7(&self, x: &MClosedSet, xs: &ElementSet) -> Check {
        let m = self.m;
        for i in m.proper() {
            let is_x = xs.contains(i);
            let by_residual = xclass::residual_characterization(m, x, i);
            let not_below: Vec<usize> = m.elements().filter(|&a| !m.leq(a, i)).collect();
            let residuals_are_x = not_below.iter().all(|&a| xs.contains(m.residual(i, a)));
            let residuals_inside = not_below
                .iter()
                .all(|&a| m.down_set(m.residual(i, a)).is_subset(x.members()));
            ensure(
                is_x == by_residual && is_x == residuals_are_x && is_x == residuals_inside,
                || {
                    format!(
                        "i = {}: X-element {is_x}, i = (i:a) for a ∉ X {by_residual}, \
                         (i:a) X-elements {residuals_are_x}, ((i:a)] ⊆ X {residuals_inside}",
                        self.l(i)
                    )
                },
            )?;
            if is_x {
                for a in m.elements().filter(|&a| !x.contains(a)) {
                    let r = m.residual(i, a);
                    ensure(xs.contains(r), || {
                        format!("({}:{}) = {} is not an X-element", self.l(i), self.l(a), self.l(r))
                    })?;
                }
            }
        }
        Ok(())
    }

    /// Maximal X-elements are prime.
    fn l8(&self, xs: &ElementSet) -> Check {
        let m = self.m;
        for i in xs.iter().filter(|&i| !xs.iter().any(|k| m.lt(i, k))) {
            ensure(m.is_prime(i), || {
                format!("maximal X-element {} is not prime", self.l(i))
            })?;
        }
        Ok(())
    }

    /// Cancellation by elements outside X.
    fn l13(&self, x: &MClosedSet, xs: &ElementSet) -> Check {
        let m = self.m;
        for k in m.elements().filter(|&k| !x.contains(k)) {
            for i1 in xs {
                for i2 in xs.iter().filter(|&i2| i2 > i1) {
                    ensure(m.mul(i1, k) != m.mul(i2, k), || {
                        format!(
                            "{}·{} = {}·{} for distinct X-elements",
                            self.l(i1),
                            self.l(k),
                            self.l(i2),
                            self.l(k)
                        )
                    })?;
                }
            }
            for i in m.elements() {
                let ik = m.mul(i, k);
                ensure(!xs.contains(ik) || ik == i, || {
                    format!("{}·{} = {} is an X-element but differs from {}", self.l(i), self.l(k), self.l(ik), self.l(i))
                })?;
            }
        }
        Ok(())
    }

    /// X-element ⟺ `L ∖ (i]` is X-multiplicatively closed.
    fn l14(&self, x: &MClosedSet, xs: &ElementSet) -> Check {
        let m = self.m;
        for i in m.proper() {
            let by_complement = xclass::complement_characterization(m, x, i);
            ensure(by_complement == xs.contains(i), || {
                format!(
                    "i = {}: X-element {} but L ∖ (i] X-multiplicatively closed {by_complement}",
                    self.l(i),
                    xs.contains(i)
                )
            })?;
        }
        Ok(())
    }

    /// Every element is compact here, so the compact criterion is the full
    /// one; for principal X the criterion restricted to join-irreducible
    /// generators must agree as well.
    fn l15(&self, x: &MClosedSet, xs: &ElementSet) -> Check {
        let m = self.m;
        if x.principal_generator(m).is_none() {
            return Ok(());
        }
        let gens = m.join_irreducibles();
        for i in m.proper() {
            let restricted = gens.iter().filter(|&a| !x.contains(a)).all(|a| {
                gens.iter()
                    .all(|b| !m.leq(m.mul(a, b), i) || m.leq(b, i))
            });
            ensure(restricted == xs.contains(i), || {
                format!(
                    "i = {}: X-element {} but generator criterion {restricted}",
                    self.l(i),
                    xs.contains(i)
                )
            })?;
        }
        Ok(())
    }

    /// Maximal elements avoiding an X-multiplicatively closed set are
    /// X-elements.
    fn maximal_avoiding(&self, x: &MClosedSet) -> Check {
        let m = self.m;
        let outside = x.members().complement();
        let mut seeds: Vec<ElementSet> = vec![outside.clone()];
        seeds.extend(m.elements().map(|s| {
            let mut seed = outside.clone();
            seed.insert(s);
            seed
        }));
        for seed in seeds.into_iter().filter(|s| !s.is_empty()) {
            let closed = self.x_mult_closure(&outside, seed);
            let Ok(avoid) = XMultClosedSet::new(m, x, closed) else {
                unreachable!("closure is X-multiplicatively closed")
            };
            for a in m.elements() {
                if avoid.members().iter().any(|t| m.leq(t, a)) {
                    continue;
                }
                let maximals = xclass::avoiding_maximals(m, a, &avoid).map_err(|e| e.to_string())?;
                for i in maximals {
                    ensure(xclass::is_x_element(m, x, i), || {
                        format!(
                            "a = {}, A = {}: maximal avoiding element {} is not an X-element",
                            self.l(a),
                            self.labels(avoid.members()),
                            self.l(i)
                        )
                    })?;
                }
            }
        }
        Ok(())
    }

    fn x_mult_closure(&self, outside: &ElementSet, mut set: ElementSet) -> ElementSet {
        loop {
            let mut grown = set.clone();
            for a1 in outside {
                for a2 in &set {
                    grown.insert(self.m.mul(a1, a2));
                }
            }
            if grown == set {
                return set;
            }
            set = grown;
        }
    }

    /// In a local lattice every proper element is an (m]-element.
    fn l3(&self) -> Check {
        let m = self.m;
        if self.max.len() != 1 {
            return Ok(());
        }
        let top_max = self.max.first().expect("one maximal element");
        let x = MClosedSet::down_set(m, top_max);
        for i in m.proper() {
            ensure(xclass::is_x_element(m, &x, i), || {
                format!("local lattice: {} is not an ({}]-element", self.l(i), self.l(top_max))
            })?;
        }
        Ok(())
    }

    /// If every proper element is an (m]-element then m is the unique maximal.
    fn l4(&self) -> Check {
        let m = self.m;
        for cand in m.proper() {
            let x = MClosedSet::down_set(m, cand);
            if m.proper().all(|i| xclass::is_x_element(m, &x, i)) {
                ensure(self.max.len() == 1 && self.max.contains(cand), || {
                    format!(
                        "every proper element is a ({}]-element but Max = {}",
                        self.l(cand),
                        self.labels(&self.max)
                    )
                })?;
            }
        }
        Ok(())
    }

    /// For X = (j]: a prime or maximal i ≥ j is an X-element iff i = j.
    fn l9(&self) -> Check {
        let m = self.m;
        for j in m.elements() {
            let x = MClosedSet::down_set(m, j);
            for i in m.up_set(j).iter().filter(|&i| m.is_prime(i) || self.max.contains(i)) {
                let is_x = xclass::is_x_element(m, &x, i);
                ensure(is_x == (i == j), || {
                    format!(
                        "X = ({}]: {} i = {} has X-element {is_x}",
                        self.l(j),
                        if self.max.contains(i) { "maximal" } else { "prime" },
                        self.l(i)
                    )
                })?;
            }
        }
        Ok(())
    }

    fn meet_of_primes(&self) -> usize {
        self.m.big_meet(self.m.primes().iter())
    }

    /// X = (meet of primes]: an X-element exists ⟺ j prime ⟺ |Min(L)| = 1.
    fn l10(&self) -> Check {
        let m = self.m;
        let j = self.meet_of_primes();
        let min = m.min_primes().expect("nondegenerate");
        ensure(m.big_meet(min.iter()) == j, || {
            format!(
                "meet of all primes {} differs from meet of minimal primes {}",
                self.l(j),
                self.l(m.big_meet(min.iter()))
            )
        })?;
        let x = MClosedSet::down_set(m, j);
        let exists = !xclass::x_elements(m, &x).is_empty();
        let prime = m.is_prime(j);
        let unique = min.len() == 1;
        ensure(exists == prime && prime == unique, || {
            format!(
                "j = {}: X-element exists {exists}, j prime {prime}, |Min(L)| = {}",
                self.l(j),
                min.len()
            )
        })
    }

    /// Same X: X-element ⟺ primary with radical j.
    fn l11(&self) -> Check {
        let m = self.m;
        let j = self.meet_of_primes();
        let x = MClosedSet::down_set(m, j);
        for i in m.proper() {
            let is_x = xclass::is_x_element(m, &x, i);
            let primary = m.is_primary(i) && m.radical(i) == j;
            ensure(is_x == primary, || {
                format!(
                    "j = {}, i = {}: X-element {is_x}, primary with √i = j {primary}",
                    self.l(j),
                    self.l(i)
                )
            })?;
        }
        Ok(())
    }

    /// X = (J(L)]: X-element ⟺ (a·b ≤ i ⟹ a ≤ i or b ≤ m) with m the meet
    /// of maximal elements above i, and m = J(L).
    fn l12(&self) -> Check {
        let m = self.m;
        let j = m.big_meet(self.max.iter());
        let x = MClosedSet::down_set(m, j);
        for i in m.proper() {
            let above = m.big_meet(self.max.iter().filter(|&k| m.leq(i, k)));
            let condition = above == j
                && m.elements().all(|a| {
                    m.elements().all(|b| {
                        !m.leq(m.mul(a, b), i) || m.leq(a, i) || m.leq(b, above)
                    })
                });
            let is_x = xclass::is_x_element(m, &x, i);
            ensure(is_x == condition, || {
                format!(
                    "i = {}: J-element {is_x}, condition with m = {} gives {condition}",
                    self.l(i),
                    self.l(above)
                )
            })?;
        }
        Ok(())
    }

    /// n-elements are r- and J-elements, with the underlying inclusions.
    fn l16(&self) -> Check {
        let m = self.m;
        let (r, n, j) = match (xclass::r_set(m), xclass::n_set(m), xclass::j_set(m)) {
            (Ok(r), Ok(n), Ok(j)) => (r, n, j),
            _ => return Err("standard sets unavailable".to_string()),
        };
        ensure(n.members().is_subset(r.members()), || {
            format!(
                "(√0] = {} is not inside Z(L) = {}",
                self.labels(n.members()),
                self.labels(r.members())
            )
        })?;
        ensure(n.members().is_subset(j.members()), || {
            format!(
                "(√0] = {} is not inside (J(L)] = {}",
                self.labels(n.members()),
                self.labels(j.members())
            )
        })?;
        let (rs, ns, js) = (
            xclass::x_elements(m, &r),
            xclass::x_elements(m, &n),
            xclass::x_elements(m, &j),
        );
        ensure(ns.is_subset(&rs), || {
            format!("n-elements {} are not r-elements", self.labels(&ns.difference(&rs)))
        })?;
        ensure(ns.is_subset(&js), || {
            format!("n-elements {} are not J-elements", self.labels(&ns.difference(&js)))
        })
    }
}
