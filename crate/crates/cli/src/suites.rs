//! Named verification suites. Every item builds its groups from spec text,
//! so the parser is exercised on the whole catalog as a side effect.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use irratio_core::analysis::{
    conjugacy_classes, fitting_length, fitting_subgroup, frattini_pgroup, involution_subgroup, is_abelian,
    is_elementary_abelian, is_frobenius_with_complement, is_nilpotent, is_real, min_generators, p_core, sylow,
};
use irratio_core::arith::{factorize, is_pi_number, prime_divisors};
use irratio_core::constructions::classical::{antidiagonal, is_unitary, unitary_frame};
use irratio_core::constructions::lie::{psu3_witness, witness_st};
use irratio_core::irrationality::odd_primes;
use irratio_core::law::MatLaw;
use irratio_core::{
    irrationality, is_irrational, is_pi_irrational, pi_irrationality, power_witness, FieldCtx, Group, GroupError,
    Matrix, Subgroup, Verdict,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::parser::parse_group_spec;
use crate::report::{Item, SuiteResult, WitnessOut};
use crate::search::{metacyclic_grid, smallgroup16_search};

pub const SUITES: [&str; 19] = [
    "thm_2simple_psl",
    "thm_2simple_witnesses",
    "thm_2simple_sz_j1",
    "lem_sylow2irr",
    "lem_pinormal",
    "bound_lemma",
    "thm_main_consequences",
    "thm_pirr_consequences",
    "three_irrational_simple",
    "prop_collapse_metacyclic",
    "prop_collapse_supersolvable_certified",
    "prop_frobenius",
    "fitting_escalation",
    "winter_nonabelian_sylow",
    "wreath_counterexample",
    "minimal_nonabelian",
    "smallgroup16_search",
    "squarefree_nilpotent",
    "p3_groups",
];

pub const PSL_QS: [u32; 13] = [4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27];

/// The groups the cross-cutting suites quantify over.
pub const CATALOG: [&str; 41] = [
    "cyclic(12)",
    "abelian(2,4)",
    "elemab(2,3)",
    "dihedral(8)",
    "dihedral(12)",
    "quaternion(8)",
    "quaternion(16)",
    "symmetric(3)",
    "symmetric(4)",
    "alternating(4)",
    "alternating(5)",
    "alternating(6)",
    "psl(2,7)",
    "psl(2,8)",
    "psl(2,9)",
    "psl(2,11)",
    "psl(2,13)",
    "psl(2,17)",
    "gl(2,3)",
    "sl(2,3)",
    "su(3,3)",
    "psp(4,3)",
    "sz(8)",
    "suzuki2(8)",
    "psu3_unipotent(4)",
    "j1()",
    "singer_frobenius(5)",
    "singer_frobenius(7)",
    "extraspecial(3,1)",
    "extraspecial(5,1)",
    "metacyclic(7,3,2)",
    "metacyclic(9,3,4)",
    "minimal_nonabelian_p(2,2,1)",
    "minimal_nonabelian_p(3,1,1)",
    "minimal_nonabelian_qp(3,5,1)",
    "semidirect(elemab(5,2),cyclic(3),companion(x^2+x+1@5))",
    "regular_module(cyclic(3),5)",
    "wreath(cyclic(3),cyclic_perm(3))",
    "sz2_frobenius()",
    "direct(dihedral(8),cyclic(3))",
    "direct(suzuki2(8),cyclic(3))",
];

/// Outcome of one item: the observed value and an optional witness.
pub struct Obs {
    value: Value,
    witness: Option<WitnessOut>,
}

pub fn obs(value: impl Into<Value>) -> Obs {
    Obs {
        value: value.into(),
        witness: None,
    }
}

fn verdict_obs(g: &Group, v: &Verdict) -> Obs {
    Obs {
        value: v.is_irrational().into(),
        witness: v.witness().map(|w| WitnessOut::new(g, w)),
    }
}

pub struct Runner {
    budget: usize,
    seed: u64,
    cache: RefCell<HashMap<String, Group>>,
}

struct Items<'r> {
    runner: &'r Runner,
    items: Vec<Item>,
    budget_hit: bool,
}

impl Items<'_> {
    fn check(
        &mut self,
        desc: impl Into<String>,
        spec: impl Into<String>,
        expected: impl Into<Value>,
        f: impl FnOnce(&Runner) -> anyhow::Result<Obs>,
    ) {
        let start = Instant::now();
        let expected = expected.into();
        let (observed, witness) = match f(self.runner) {
            Ok(o) => (o.value, o.witness),
            Err(e) => {
                let budget = e
                    .chain()
                    .any(|c| matches!(c.downcast_ref::<GroupError>(), Some(GroupError::BudgetExceeded(_))));
                if budget {
                    self.budget_hit = true;
                    (Value::String(format!("skipped: {e:#}")), None)
                } else {
                    (Value::String(format!("error: {e:#}")), None)
                }
            }
        };
        self.items.push(Item {
            desc: desc.into(),
            spec: spec.into(),
            pass: expected == observed,
            expected,
            observed,
            witness,
            millis: start.elapsed().as_millis() as u64,
        });
    }
}

impl Items<'_> {
    /// An example out of desk scale, recorded rather than silently dropped.
    /// Counts as passing: nothing was claimed.
    fn skip(&mut self, desc: &str, spec: &str, reason: &str) {
        let value = Value::String(format!("skipped: {reason}"));
        self.items.push(Item {
            desc: desc.into(),
            spec: spec.into(),
            expected: value.clone(),
            observed: value,
            pass: true,
            witness: None,
            millis: 0,
        });
    }
}

impl Runner {
    pub fn new(budget: usize, seed: u64) -> Self {
        Runner {
            budget,
            seed,
            cache: RefCell::new(HashMap::new()),
        }
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Parses and builds `spec`, memoized per runner.
    pub fn group(&self, spec: &str) -> anyhow::Result<Group> {
        if let Some(g) = self.cache.borrow().get(spec) {
            return Ok(g.clone());
        }
        let node = parse_group_spec(spec).with_context(|| format!("parsing {spec:?}"))?;
        let g = node
            .build_with_budget(self.budget)
            .with_context(|| format!("building {spec}"))?;
        g.enumeration().with_context(|| format!("enumerating {spec}"))?;
        self.cache.borrow_mut().insert(spec.to_string(), g.clone());
        Ok(g)
    }

    pub fn run(&self, name: &str) -> anyhow::Result<SuiteResult> {
        let mut it = Items {
            runner: self,
            items: Vec::new(),
            budget_hit: false,
        };
        match name {
            "thm_2simple_psl" => thm_2simple_psl(&mut it),
            "thm_2simple_witnesses" => thm_2simple_witnesses(&mut it),
            "thm_2simple_sz_j1" => thm_2simple_sz_j1(&mut it),
            "lem_sylow2irr" => lem_sylow2irr(&mut it),
            "lem_pinormal" => lem_pinormal(&mut it),
            "bound_lemma" => bound_lemma(&mut it),
            "thm_main_consequences" => thm_main_consequences(&mut it),
            "thm_pirr_consequences" => thm_pirr_consequences(&mut it),
            "three_irrational_simple" => three_irrational_simple(&mut it),
            "prop_collapse_metacyclic" => prop_collapse_metacyclic(&mut it),
            "prop_collapse_supersolvable_certified" => prop_collapse_supersolvable(&mut it),
            "prop_frobenius" => prop_frobenius(&mut it),
            "fitting_escalation" => fitting_escalation(&mut it),
            "winter_nonabelian_sylow" => winter_nonabelian_sylow(&mut it),
            "wreath_counterexample" => wreath_counterexample(&mut it),
            "minimal_nonabelian" => minimal_nonabelian(&mut it),
            "smallgroup16_search" => smallgroup16(&mut it),
            "squarefree_nilpotent" => squarefree_nilpotent(&mut it),
            "p3_groups" => p3_groups(&mut it),
            _ => bail!("unknown suite {name:?}; known suites: {}", SUITES.join(", ")),
        }
        Ok(SuiteResult::new(name, it.items, it.budget_hit))
    }
}

// ---------------------------------------------------------------------------
// shared checks

/// Sylow `p`-subgroup as a standalone group.
pub fn sylow_group(g: &Group, p: u64) -> anyhow::Result<Group> {
    Ok(sylow(g, p)?.to_group(format!("sylow({},{p})", g.label()))?)
}

pub fn involution_class_count(g: &Group) -> anyhow::Result<usize> {
    let cl = conjugacy_classes(g)?;
    Ok(cl.reps().iter().filter(|&&r| g.order_of_idx(r) == 2).count())
}

pub fn count_of_order(g: &Group, n: u64) -> usize {
    g.orders().iter().filter(|&&o| o as u64 == n).count()
}

/// Order 8, non-abelian, exactly two elements of order 4.
pub fn is_d8(g: &Group) -> irratio_core::Result<bool> {
    Ok(g.order()? == 8 && !is_abelian(g)? && count_of_order(g, 4) == 2)
}

/// Whether `G` has a quotient isomorphic to `D_8` by a central subgroup of order 2.
pub fn has_d8_quotient_by_central_involution(g: &Group) -> irratio_core::Result<bool> {
    let z = irratio_core::analysis::center(g)?;
    for &x in z.members() {
        if g.order_of_idx(x) != 2 {
            continue;
        }
        let n = Subgroup::generated(g, &[x])?;
        let q = irratio_core::products::quotient_group(g, &n)?;
        if is_d8(&q)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `(d, s, |Ω|, |P:Φ|)` for a 2-group.
pub fn bound_data(p: &Group) -> anyhow::Result<(u32, usize, usize, usize)> {
    let d = min_generators(p)?;
    let s = involution_class_count(p)?;
    let omega = involution_subgroup(p)?.order();
    let index = p.order()? / frattini_pgroup(p)?.order();
    Ok((d, s, omega, index))
}

/// Checks that non-commuting pairs generate `G`: all pairs below order 500,
/// otherwise `samples` seeded random pairs. Returns `(pairs checked, failures)`.
pub fn noncommuting_pairs_generate(g: &Group, samples: usize, seed: u64) -> anyhow::Result<(usize, usize)> {
    let n = g.order()? as u32;
    let mut checked = 0;
    let mut failures = 0;
    let mut test = |x: u32, y: u32| -> anyhow::Result<()> {
        if g.mul_idx(x, y) != g.mul_idx(y, x) {
            checked += 1;
            if !Subgroup::generated(g, &[x, y])?.is_whole() {
                failures += 1;
            }
        }
        Ok(())
    };
    if n < 500 {
        // ⟨x,y⟩^c = ⟨x^c,y^c⟩, so x may run over class representatives
        for &x in conjugacy_classes(g)?.reps() {
            for y in 0..n {
                test(x, y)?;
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut drawn = 0;
        while drawn < samples {
            let (x, y) = (rng.random_range(0..n), rng.random_range(0..n));
            if g.mul_idx(x, y) != g.mul_idx(y, x) {
                drawn += 1;
                test(x, y)?;
            }
        }
    }
    Ok((checked, failures))
}

fn squarefree(n: u64) -> bool {
    factorize(n).iter().all(|&(_, e)| e == 1)
}

/// A subgroup generated by the first element of the given order.
fn cyclic_of_order(g: &Group, n: u64) -> anyhow::Result<Subgroup> {
    let x = (0..g.len() as u32)
        .find(|&i| g.order_of_idx(i) == n)
        .ok_or_else(|| anyhow!("no element of order {n}"))?;
    Ok(Subgroup::generated(g, &[x])?)
}

// ---------------------------------------------------------------------------
// suites

fn thm_2simple_psl(it: &mut Items) {
    for q in PSL_QS {
        // PSL(2,4) ≅ PSL(2,5), so even q count with 0 mod 8
        let expected = q % 2 == 0 || q % 8 == 3 || q % 8 == 5;
        let spec = format!("psl(2,{q})");
        it.check(
            format!("PSL(2,{q}) is 2-irrational iff q is even or q = 3,5 mod 8"),
            &spec,
            expected,
            |r| {
                let g = r.group(&spec)?;
                Ok(verdict_obs(&g, &pi_irrationality(&g, &[2])?))
            },
        );
    }
}

fn matrix_group(field: &Arc<FieldCtx>, mats: &[Matrix], label: &str) -> anyhow::Result<Group> {
    let law = MatLaw::linear(field.clone(), mats[0].dim());
    let gens = mats.iter().map(|m| law.element(m)).collect();
    Ok(Group::new(Arc::new(law), gens, label)?)
}

fn thm_2simple_witnesses(it: &mut Items) {
    it.check(
        "s and t have orders 4 and 2 and generate D8 inside SL(3,3)",
        "sl(3,3)",
        json!([4, 2, true, true]),
        |r| {
            let f = FieldCtx::new(3, 1)?;
            let (s, t) = witness_st(&f);
            let sl = r.group("sl(3,3)")?;
            let law = MatLaw::linear(f.clone(), 3);
            let inside = sl.index_of(&law.element(&s)).is_some() && sl.index_of(&law.element(&t)).is_some();
            let h = matrix_group(&f, &[s.clone(), t.clone()], "<s,t>")?;
            Ok(obs(json!([s.order(&f, 100), t.order(&f, 100), inside, is_d8(&h)?])))
        },
    );
    it.check(
        "s and t conjugated into SU(3,3) generate D8 there",
        "su(3,3)",
        json!([true, true]),
        |r| {
            let f = FieldCtx::new(3, 2)?;
            let (s, t) = witness_st(&f);
            let d = unitary_frame(&f).ok_or_else(|| anyhow!("no unitary frame over GF(9)"))?;
            let di = d.inverse(&f).ok_or_else(|| anyhow!("singular frame"))?;
            let (s2, t2) = (di.mul(&s, &f).mul(&d, &f), di.mul(&t, &f).mul(&d, &f));
            let j = antidiagonal(3);
            let su = r.group("su(3,3)")?;
            let law = MatLaw::linear(f.clone(), 3);
            let inside = is_unitary(&f, &s2, &j)
                && is_unitary(&f, &t2, &j)
                && su.index_of(&law.element(&s2)).is_some()
                && su.index_of(&law.element(&t2)).is_some();
            let h = matrix_group(&f, &[s2, t2], "<s,t>")?;
            Ok(obs(json!([inside, is_d8(&h)?])))
        },
    );
    for spec in ["sl(3,3)", "su(3,3)"] {
        it.check(format!("{spec} is not 2-irrational"), spec, false, |r| {
            let g = r.group(spec)?;
            Ok(verdict_obs(&g, &pi_irrationality(&g, &[2])?))
        });
    }
    it.check(
        "PSU(3,4) unipotent witness: A of order 4 with A^B = A^-1",
        "psu3_unipotent(4)",
        json!([4, true, true]),
        |r| {
            let (a, b) = psu3_witness(4)?;
            let f = FieldCtx::with_order(16)?;
            let bi = b.inverse(&f).ok_or_else(|| anyhow!("B is singular"))?;
            let ai = a.inverse(&f).ok_or_else(|| anyhow!("A is singular"))?;
            let p = r.group("psu3_unipotent(4)")?;
            let law = MatLaw::linear(f.clone(), 3);
            let inside = p.index_of(&law.element(&a)).is_some() && p.index_of(&law.element(&b)).is_some();
            Ok(obs(json!([a.order(&f, 100), bi.mul(&a, &f).mul(&b, &f) == ai, inside])))
        },
    );
    it.check("PSU(3,4) is not 2-irrational", "psu(3,4)", false, |r| {
        let g = r.group("psu(3,4)")?;
        Ok(verdict_obs(&g, &pi_irrationality(&g, &[2])?))
    });
    it.check("PSp(4,3) has a real element of order 4", "psp(4,3)", true, |r| {
        let g = r.group("psp(4,3)")?;
        let cl = conjugacy_classes(&g)?;
        for &x in cl.reps() {
            if g.order_of_idx(x) == 4 {
                if let Some(w) = power_witness(&g, x, 3)? {
                    return Ok(Obs {
                        value: true.into(),
                        witness: Some(WitnessOut::new(&g, &w)),
                    });
                }
            }
        }
        Ok(obs(false))
    });
    for (spec, desc) in [
        ("gl(2,3)", "GL(2,3) is not irrational"),
        ("alternating(6)", "A6 is not 2-irrational (it contains D8)"),
    ] {
        it.check(desc, spec, false, |r| {
            let g = r.group(spec)?;
            let v = if spec == "gl(2,3)" {
                irrationality(&g)?
            } else {
                pi_irrationality(&g, &[2])?
            };
            Ok(verdict_obs(&g, &v))
        });
    }
    for (spec, desc) in [
        ("2F4(q)", "large Ree groups are not 2-irrational"),
        (
            "PSU(4,2^m), PSU(5,2^m)",
            "unitary groups of rank 4 and 5 in characteristic 2 are not 2-irrational",
        ),
    ] {
        it.skip(
            desc,
            spec,
            "too large to enumerate; small witnesses stand in (GL(2,3), PSU(3,4))",
        );
    }
}

fn thm_2simple_sz_j1(it: &mut Items) {
    it.check("Sz(8) is 2-irrational", "sz(8)", true, |r| {
        let g = r.group("sz(8)")?;
        Ok(verdict_obs(&g, &pi_irrationality(&g, &[2])?))
    });
    it.check(
        "Sz(8) is not irrational (some odd-order class has |B| > 1)",
        "sz(8)",
        false,
        |r| {
            let g = r.group("sz(8)")?;
            Ok(verdict_obs(&g, &irrationality(&g)?))
        },
    );
    it.check(
        "order-4 elements of the Suzuki 2-group are not real",
        "suzuki2(8)",
        0,
        |r| {
            let g = r.group("suzuki2(8)")?;
            let real = (0..g.len() as u32)
                .filter(|&x| g.order_of_idx(x) == 4)
                .map(|x| is_real(&g, x))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(obs(real.into_iter().filter(|&b| b).count()))
        },
    );
    it.check("J1 is 2-irrational", "j1()", true, |r| {
        let g = r.group("j1()")?;
        Ok(verdict_obs(&g, &pi_irrationality(&g, &[2])?))
    });
    it.check(
        "J1 has elementary abelian Sylow 2-subgroups of order 8",
        "j1()",
        json!([8, true]),
        |r| {
            let p = sylow_group(&r.group("j1()")?, 2)?;
            Ok(obs(json!([p.order()?, is_elementary_abelian(&p)?])))
        },
    );
    it.check(
        "small Ree groups: elementary abelian Sylow 2 of order 8 is irrational (Ree group not constructed)",
        "elemab(2,3)",
        true,
        |r| Ok(obs(is_irrational(&r.group("elemab(2,3)")?)?)),
    );
    it.skip(
        "2-irrational perfect group of order 2^12*3^2*5 with G/F(G) = A6",
        "PerfectGroup(184320,19)",
        "no construction for it in the group grammar",
    );
}

fn lem_sylow2irr(it: &mut Items) {
    for spec in CATALOG {
        it.check(
            "G is 2-irrational iff its Sylow 2-subgroup is irrational",
            spec,
            true,
            |r| {
                let g = r.group(spec)?;
                let lhs = is_pi_irrational(&g, &[2])?;
                let rhs = is_irrational(&sylow_group(&g, 2)?)?;
                Ok(obs(lhs == rhs))
            },
        );
    }
}

/// `(spec, π, q)`: quotient by `O_q(G)` with `q ∉ π`.
pub const PINORMAL_PAIRS: [(&str, &[u64], u64); 12] = [
    ("semidirect(elemab(5,2),cyclic(3),companion(x^2+x+1@5))", &[3], 5),
    ("minimal_nonabelian_qp(3,5,1)", &[5], 3),
    ("regular_module(cyclic(3),5)", &[3], 5),
    ("singer_frobenius(7)", &[7], 2),
    ("singer_frobenius(5)", &[5], 2),
    ("sz2_frobenius()", &[7], 13),
    ("sz2_frobenius()", &[2, 7], 13),
    ("minimal_nonabelian_qp(2,3,1)", &[3], 2),
    ("direct(psl(2,13),cyclic(5))", &[2], 5),
    ("direct(suzuki2(8),elemab(3,2))", &[2], 3),
    ("direct(sz(8),cyclic(3))", &[2], 3),
    ("direct(minimal_nonabelian_qp(2,3,1),cyclic(5))", &[2, 3], 5),
];

/// Whether `G/O_q(G)` is π-irrational, after checking the hypotheses.
pub fn pinormal_check(g: &Group, pi: &[u64], q: u64) -> anyhow::Result<bool> {
    if pi.contains(&q) {
        bail!("{q} lies in π");
    }
    let n = p_core(g, q)?;
    if !n.is_normal() || !is_pi_number(n.order() as u64, &[q]) {
        bail!("O_{q} is not a normal {q}-subgroup");
    }
    if n.is_trivial() {
        bail!("O_{q} is trivial");
    }
    if !is_pi_irrational(g, pi)? {
        bail!("hypothesis fails: G is not π-irrational");
    }
    let quotient = irratio_core::products::quotient_group(g, &n)?;
    Ok(is_pi_irrational(&quotient, pi)?)
}

fn lem_pinormal(it: &mut Items) {
    for (spec, pi, q) in PINORMAL_PAIRS {
        let desc = format!("G is {pi:?}-irrational, so G/O_{q}(G) is too");
        it.check(desc, spec, true, |r| pinormal_check(&r.group(spec)?, pi, q).map(obs));
    }
}

/// Irrational 2-groups checked against `2^d <= s + 1`.
pub const BOUND_GROUPS: [&str; 8] = [
    "elemab(2,1)",
    "elemab(2,2)",
    "elemab(2,3)",
    "elemab(2,4)",
    "elemab(2,5)",
    "suzuki2(8)",
    "minimal_nonabelian_p(2,2,1)",
    "abelian(2,4)",
];

fn bound_item(it: &mut Items, spec: &str, g: Option<Group>) {
    it.check(
        "irrational 2-group: 2^d <= s+1 and |Omega| >= |P:Phi|",
        spec,
        true,
        |r| {
            let p = match g {
                Some(g) => g,
                None => r.group(spec)?,
            };
            if !is_irrational(&p)? {
                bail!("not irrational");
            }
            let (d, s, omega, index) = bound_data(&p)?;
            Ok(obs((1usize << d) <= s + 1 && omega >= index))
        },
    );
}

fn bound_lemma(it: &mut Items) {
    for spec in BOUND_GROUPS {
        bound_item(it, spec, None);
    }
    match smallgroup16_search() {
        Ok(hits) => match hits.into_iter().find(|h| h.irrational && h.d8_quotient) {
            Some(h) => {
                let spec = h.group.label().to_string();
                bound_item(it, &spec, Some(h.group));
            }
            None => it.check("search winner exists", "smallgroup16_search", true, |_| Ok(obs(false))),
        },
        Err(e) => it.check("search winner exists", "smallgroup16_search", true, |_| Err(e.into())),
    }
    it.check(
        "Suzuki 2-group of order 64 has d = 3 and s = 7",
        "suzuki2(8)",
        json!({"d": 3, "s": 7}),
        |r| {
            let (d, s, _, _) = bound_data(&r.group("suzuki2(8)")?)?;
            Ok(obs(json!({"d": d, "s": s})))
        },
    );
    it.skip(
        "census: 656 irrational groups of order 2^9",
        "order 512",
        "needs an isomorphism-classified catalog; the bound and Sylow suites stand in",
    );
}

fn thm_main_consequences(it: &mut Items) {
    for spec in CATALOG {
        it.check("2'-irrational implies a normal Sylow 2-subgroup", spec, true, |r| {
            let g = r.group(spec)?;
            if !is_pi_irrational(&g, &odd_primes(&g)?)? {
                return Ok(obs(true));
            }
            Ok(obs(sylow(&g, 2)?.is_normal()))
        });
        it.check(
            "irrational implies involutions form an elementary abelian normal subgroup",
            spec,
            true,
            |r| {
                let g = r.group(spec)?;
                if !is_irrational(&g)? {
                    return Ok(obs(true));
                }
                let inv = involution_subgroup(&g)?;
                Ok(obs(inv.is_normal() && is_elementary_abelian(&inv.to_group("Omega")?)?))
            },
        );
    }
    it.check(
        "negative control S4 fails the 2'-irrational hypothesis",
        "symmetric(4)",
        json!([false, false]),
        |r| {
            let g = r.group("symmetric(4)")?;
            Ok(obs(json!([is_pi_irrational(&g, &[3])?, sylow(&g, 2)?.is_normal()])))
        },
    );
}

pub const SIMPLE_GROUPS: [&str; 16] = [
    "psl(2,4)",
    "psl(2,5)",
    "psl(2,7)",
    "psl(2,8)",
    "psl(2,9)",
    "psl(2,11)",
    "psl(2,13)",
    "psl(2,16)",
    "psl(2,17)",
    "psl(2,19)",
    "psl(2,23)",
    "psl(2,25)",
    "psl(2,27)",
    "sz(8)",
    "j1()",
    "alternating(6)",
];

fn thm_pirr_consequences(it: &mut Items) {
    for spec in SIMPLE_GROUPS {
        let g = match it.runner.group(spec) {
            Ok(g) => g,
            Err(e) => {
                it.check("simple group builds", spec, true, |_| Err(e));
                continue;
            }
        };
        let order = g.order().unwrap_or(0) as u64;
        for p in prime_divisors(order).into_iter().filter(|&p| p >= 5) {
            it.check(format!("simple group is not {p}-irrational"), spec, false, |_| {
                Ok(verdict_obs(&g, &pi_irrationality(&g, &[p])?))
            });
        }
    }
}

fn three_irrational_simple(it: &mut Items) {
    for (spec, expected) in [
        ("psl(2,27)", true),
        ("sz(8)", true),
        ("psl(2,9)", false),
        ("psl(2,8)", false),
        ("psl(2,7)", false),
        ("psl(2,13)", false),
        ("alternating(5)", false),
        ("j1()", false),
    ] {
        it.check(
            "3-irrational simple groups are PSL(2,3^(2f+1)) and Sz(q)",
            spec,
            expected,
            |r| {
                let g = r.group(spec)?;
                Ok(verdict_obs(&g, &pi_irrationality(&g, &[3])?))
            },
        );
    }
    it.check("3 does not divide |Sz(8)|", "sz(8)", true, |r| {
        Ok(obs(r.group("sz(8)")?.order()? % 3 != 0))
    });
}

/// Abelian test on the generators, without enumerating.
fn generators_commute(g: &Group) -> bool {
    let gens = g.generators();
    gens.iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| g.mul(a, b) == g.mul(b, a)))
}

fn prop_collapse_metacyclic(it: &mut Items) {
    let grid = metacyclic_grid(2000);
    type Row = (u32, u32, u32);
    let mut by_m: Vec<(u32, Vec<Row>)> = Vec::new();
    for t in grid {
        match by_m.last_mut() {
            Some((m, v)) if *m == t.1 => v.push(t),
            _ => by_m.push((t.1, vec![t])),
        }
    }
    for (m, groups) in by_m {
        let desc = format!(
            "irrational metacyclic C_n:C_{m} (nm <= 2000, {} groups) are abelian",
            groups.len()
        );
        it.check(desc, format!("metacyclic(n,{m},k)"), 0, |r| {
            let mut bad = 0;
            let mut first = None;
            for (n, m, k) in groups {
                let spec = format!("metacyclic({n},{m},{k})");
                let g = parse_group_spec(&spec)?.build_with_budget(r.budget())?;
                // abelian groups satisfy the implication outright
                if !generators_commute(&g) && is_irrational(&g)? {
                    bad += 1;
                    first.get_or_insert(spec);
                }
            }
            Ok(match first {
                None => obs(bad),
                Some(s) => obs(json!({"counterexamples": bad, "first": s})),
            })
        });
    }
}

pub const SUPERSOLVABLE_CERTIFIED: [&str; 12] = [
    "dihedral(8)",
    "quaternion(8)",
    "symmetric(3)",
    "metacyclic(7,3,2)",
    "metacyclic(9,3,4)",
    "metacyclic(21,2,20)",
    "extraspecial(3,1)",
    "minimal_nonabelian_p(3,1,1)",
    "suzuki2(8)",
    "abelian(2,6)",
    "direct(metacyclic(7,3,2),cyclic(5))",
    "direct(extraspecial(3,1),metacyclic(13,3,3))",
];

fn prop_collapse_supersolvable(it: &mut Items) {
    for spec in SUPERSOLVABLE_CERTIFIED {
        it.check(
            "certified supersolvable and irrational implies nilpotent",
            spec,
            true,
            |r| {
                let g = r.group(spec)?;
                Ok(obs(!is_irrational(&g)? || is_nilpotent(&g)?))
            },
        );
    }
}

pub const SINGER_MS: [u32; 8] = [3, 5, 7, 9, 11, 13, 15, 21];

pub fn singer_frobenius_check(g: &Group, m: u64) -> anyhow::Result<Value> {
    let k = cyclic_of_order(g, m)?;
    let check = is_frobenius_with_complement(g, &k)?;
    Ok(json!({
        "frobenius": check.is_frobenius,
        "irrational": is_irrational(g)?,
        "complement_order": k.order(),
        "kernel_order": check.kernel.map(|k| k.order()),
    }))
}

pub fn sz2_frobenius_check(g: &Group) -> anyhow::Result<Value> {
    let k = cyclic_of_order(g, 7)?;
    let check = is_frobenius_with_complement(g, &k)?;
    let kernel = check.kernel.ok_or_else(|| anyhow!("no Frobenius kernel"))?;
    let kg = kernel.to_group("kernel")?;
    Ok(json!({
        "order": g.order()?,
        "frobenius": check.is_frobenius,
        "irrational": is_irrational(g)?,
        "kernel_order": kernel.order(),
        "kernel_nilpotent": is_nilpotent(&kg)?,
        "kernel_abelian": is_abelian(&kg)?,
        "kernel_p_group": prime_divisors(kernel.order() as u64).len() == 1,
    }))
}

fn prop_frobenius(it: &mut Items) {
    for m in SINGER_MS {
        let spec = format!("singer_frobenius({m})");
        let n = irratio_core::arith::multiplicative_order(2, m as u64).unwrap_or(0);
        let expected = json!({
            "frobenius": true,
            "irrational": true,
            "complement_order": m,
            "kernel_order": 1u64 << n,
        });
        it.check(
            "C_2^n : C_m is an irrational Frobenius group with cyclic odd complement",
            &spec,
            expected,
            |r| singer_frobenius_check(&r.group(&spec)?, m as u64).map(obs),
        );
    }
    let expected = json!({
        "order": 75712,
        "frobenius": true,
        "irrational": true,
        "kernel_order": 64 * 169,
        "kernel_nilpotent": true,
        "kernel_abelian": false,
        "kernel_p_group": false,
    });
    it.check(
        "(P x C_13^2):C_7 is irrational Frobenius with non-abelian, non-p-group kernel",
        "sz2_frobenius()",
        expected,
        |r| sz2_frobenius_check(&r.group("sz2_frobenius()")?).map(obs),
    );
}

pub fn fitting_data(g: &Group) -> anyhow::Result<Value> {
    Ok(json!({
        "irrational": is_irrational(g)?,
        "fitting_order": fitting_subgroup(g)?.order(),
        "fitting_length": fitting_length(g)?,
    }))
}

fn fitting_escalation(it: &mut Items) {
    for (spec, f_order) in [
        ("regular_module(cyclic(3),5)", 125),
        ("semidirect(elemab(5,2),cyclic(3),companion(x^2+x+1@5))", 25),
        (
            "direct(semidirect(elemab(5,2),cyclic(3),companion(x^2+x+1@5)),minimal_nonabelian_qp(3,5,1))",
            25 * 81,
        ),
    ] {
        let expected = json!({"irrational": true, "fitting_order": f_order, "fitting_length": 2});
        it.check("irrational with F(G) = V and Fitting length 2", spec, expected, |r| {
            fitting_data(&r.group(spec)?).map(obs)
        });
    }
    it.check(
        "F(C_5^3:C_3) is the module V = O_5",
        "regular_module(cyclic(3),5)",
        true,
        |r| {
            let g = r.group("regular_module(cyclic(3),5)")?;
            Ok(obs(fitting_subgroup(&g)? == p_core(&g, 5)?))
        },
    );
}

pub const WINTER: &str = "winter(cyclic_perm(3),5)";
pub const EXTRASPECIAL_C3: &str = "extraspecial_ext(cyclic(3),5,[[0,4],[1,4]]@GF(5))";

fn winter_nonabelian_sylow(it: &mut Items) {
    for (spec, order) in [(WINTER, 234375), (EXTRASPECIAL_C3, 375)] {
        let expected = json!({"order": order, "irrational": true, "sylow5_abelian": false, "fitting_length": 2});
        it.check("irrational with non-abelian Sylow 5-subgroup", spec, expected, |r| {
            let g = r.group(spec)?;
            Ok(obs(json!({
                "order": g.order()?,
                "irrational": is_irrational(&g)?,
                "sylow5_abelian": is_abelian(&sylow_group(&g, 5)?)?,
                "fitting_length": fitting_length(&g)?,
            })))
        });
    }
}

fn wreath_counterexample(it: &mut Items) {
    let spec = "wreath(cyclic(3),cyclic_perm(3))";
    it.check("C_3 wr C_3 has order 81", spec, 81, |r| {
        Ok(obs(r.group(spec)?.order()?))
    });
    it.check("C_3 wr C_3 is not irrational", spec, false, |r| {
        let g = r.group(spec)?;
        let v = irrationality(&g)?;
        if let Some(w) = v.witness() {
            if !w.verify(&g) {
                bail!("witness does not verify");
            }
        }
        Ok(verdict_obs(&g, &v))
    });
    it.skip(
        "C_3^12:(C_5^2:C_3) is not irrational (contains C_3 wr C_3)",
        "C_3^12:(C_5^2:C_3)",
        "order 3^12*75 exceeds the enumeration budget",
    );
    it.skip(
        "irrational central extension C_3^13.(C_5^2:C_3) of 3-length 2",
        "C_3^13.(C_5^2:C_3)",
        "order 3^13*75 exceeds the enumeration budget",
    );
}

pub const MIN_NONABELIAN: [(&str, bool); 9] = [
    ("minimal_nonabelian_p(2,1,1)", false),
    ("minimal_nonabelian_p(2,2,1)", true),
    ("minimal_nonabelian_p(3,1,1)", true),
    ("minimal_nonabelian_p(3,2,1)", true),
    ("minimal_nonabelian_p(5,1,1)", true),
    ("minimal_nonabelian_qp(2,3,1)", true),
    ("minimal_nonabelian_qp(5,3,1)", true),
    ("minimal_nonabelian_qp(3,5,1)", true),
    ("minimal_nonabelian_qp(2,7,1)", true),
];

fn minimal_nonabelian(it: &mut Items) {
    let seed = it.runner.seed;
    for (spec, irrational) in MIN_NONABELIAN {
        let desc = if irrational {
            "minimal non-abelian group is irrational"
        } else {
            "D8 is metacyclic, outside the classification, and not irrational"
        };
        it.check(desc, spec, irrational, |r| {
            let g = r.group(spec)?;
            Ok(verdict_obs(&g, &irrationality(&g)?))
        });
        it.check("every non-commuting pair generates G", spec, 0, |r| {
            let (_, failures) = noncommuting_pairs_generate(&r.group(spec)?, 200, seed)?;
            Ok(obs(failures))
        });
    }
}

fn smallgroup16(it: &mut Items) {
    let hits = match smallgroup16_search() {
        Ok(h) => h,
        Err(e) => {
            it.check("search over actions of C_2 on C_4 x C_2", "abelian(4,2)", true, |_| {
                Err(e.into())
            });
            return;
        }
    };
    for h in &hits {
        it.check(
            "semidirect product by an involutory automorphism: (irrational, D8 quotient)",
            h.group.label(),
            json!([h.irrational, h.d8_quotient]),
            |_| Ok(obs(json!([h.irrational, h.d8_quotient]))),
        );
    }
    it.check(
        "some (C_4 x C_2):C_2 is irrational with a D8 quotient",
        "abelian(4,2)",
        true,
        |_| Ok(obs(hits.iter().any(|h| h.irrational && h.d8_quotient))),
    );
}

pub const SQUAREFREE_NILPOTENT: [&str; 10] = [
    "cyclic(30)",
    "abelian(6,10)",
    "elemab(3,3)",
    "elemab(2,4)",
    "extraspecial(3,1)",
    "extraspecial(5,1)",
    "extraspecial(7,1)",
    "minimal_nonabelian_p(3,1,1)",
    "direct(extraspecial(3,1),elemab(5,2))",
    "direct(extraspecial(3,1),extraspecial(5,1))",
];

fn squarefree_nilpotent(it: &mut Items) {
    for spec in SQUAREFREE_NILPOTENT {
        it.check(
            "nilpotent with squarefree exponent implies irrational",
            spec,
            json!([true, true]),
            |r| {
                let g = r.group(spec)?;
                let hyp = is_nilpotent(&g)? && squarefree(irratio_core::analysis::exponent(&g)?);
                Ok(obs(json!([hyp, is_irrational(&g)?])))
            },
        );
    }
}

fn p3_groups(it: &mut Items) {
    for p in [3u32, 5, 7] {
        let ex = format!("extraspecial({p},1)");
        it.check("exponent-p group of order p^3 is irrational", &ex, true, |r| {
            let g = r.group(&ex)?;
            Ok(verdict_obs(&g, &irrationality(&g)?))
        });
        let mc = format!("metacyclic({},{p},{})", p * p, p + 1);
        it.check("metacyclic group of order p^3 is not irrational", &mc, false, |r| {
            let g = r.group(&mc)?;
            Ok(verdict_obs(&g, &irrationality(&g)?))
        });
    }
}
