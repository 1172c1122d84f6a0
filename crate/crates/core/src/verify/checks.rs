use std::fmt::Display;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::report::{CheckReport, Counterexample, Coverage, MAX_RECORDED_FAILURES};
use super::{FunctionSpec, RunConfig, Suite, EXHAUSTIVE_LIMIT};
use crate::cantor::{
    cantor_base, cantor_decode, cantor_encode, combine, extract, extract_all,
    squared_distance_constant, squared_distance_constant_sound, CantorValue,
};
use crate::error::{Error, Result};
use crate::interleave::{deinterleave, deinterleave_k, interleave, interleave_by_addition, InterleavedPadic};
use crate::padic::{checked_pow, inverse_power, point_distance, PadicPoint, TruncatedPadicInt};
use crate::superposition::{
    build_g, build_h, superpose1, superpose2_with, superposition_argument, Builtin, Codomain,
    CylinderFunction, GFunction, HFunction, WeightConvention, MAX_TABLE_ENTRIES,
};

fn violation(
    inputs: Vec<String>,
    relation: impl Into<String>,
    lhs: impl Display,
    rhs: impl Display,
) -> Option<Counterexample> {
    Some(Counterexample {
        case: 0,
        inputs,
        relation: relation.into(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}

fn failed(inputs: Vec<String>, relation: &str, err: Error) -> Option<Counterexample> {
    violation(inputs, relation, format!("error: {err}"), "a value")
}

/// Shared-prefix length forced in slot `k` by `shared` leading digits of an `n`-way interleave.
fn slot_prefix(shared: usize, n: usize, k: usize) -> usize {
    (shared + n - 1 - k) / n
}

// Relations. Each returns the violation, if any, with its inputs in textual form.

fn cantor_roundtrip(x: &PadicPoint, n: usize) -> Option<Counterexample> {
    let rel = "decode(encode(x_k)) = x_k";
    for coord in x.coords() {
        match cantor_encode(coord, n) {
            Ok(c) => {
                let back = cantor_decode(&c);
                if &back != coord {
                    return violation(vec![x.to_string()], rel, back, coord);
                }
            }
            Err(e) => return failed(vec![x.to_string()], rel, e),
        }
    }
    None
}

fn interleave_roundtrip(x: &PadicPoint) -> Option<Counterexample> {
    let back = deinterleave(&interleave(x));
    (&back != x).then(|| violation(vec![x.to_string()], "deinterleave(interleave(x)) = x", back, x))?
}

fn deinterleave_roundtrip(z: &InterleavedPadic) -> Option<Counterexample> {
    let back = interleave(&deinterleave(z));
    (back.value() != z.value()).then(|| {
        violation(
            vec![z.value().to_string()],
            "interleave(deinterleave(z)) = z",
            back.value(),
            z.value(),
        )
    })?
}

fn chain_roundtrip(x: &PadicPoint) -> Option<Counterexample> {
    let rel = "decode(extract(combine(encode(x)))) = x";
    let inputs = || vec![x.to_string()];
    let n = x.dimension();
    let parts = match x.coords().iter().map(|c| cantor_encode(c, n)).collect::<Result<Vec<_>>>() {
        Ok(parts) => parts,
        Err(e) => return failed(inputs(), rel, e),
    };
    let z = match combine(&parts) {
        Ok(z) => z,
        Err(e) => return failed(inputs(), rel, e),
    };
    match superposition_argument(x) {
        Ok(arg) if arg == z => {}
        Ok(arg) => return violation(inputs(), "combine(encode(x)) = Σ q^(-k) phi_full(x_k)", z, arg),
        Err(e) => return failed(inputs(), rel, e),
    }
    let back: Vec<_> = extract_all(&z).iter().map(cantor_decode).collect();
    match PadicPoint::new(back) {
        Ok(back) if &back == x => None,
        Ok(back) => violation(inputs(), rel, back, x),
        Err(e) => failed(inputs(), rel, e),
    }
}

fn combine_extract(z: &CantorValue) -> Option<Counterexample> {
    let rel = "combine(extract(z)) = z";
    match combine(&extract_all(z)) {
        Ok(back) if &back == z => None,
        Ok(back) => violation(vec![z.to_string()], rel, back, z),
        Err(e) => failed(vec![z.to_string()], rel, e),
    }
}

fn interleave_placement(x: &PadicPoint) -> Option<Counterexample> {
    let rel = "interleave(x) = Σ p^k ω(x_k)";
    let placed = interleave(x).into_value();
    match interleave_by_addition(x) {
        Ok(sum) if sum == placed => None,
        Ok(sum) => violation(vec![x.to_string()], rel, placed, sum),
        Err(e) => failed(vec![x.to_string()], rel, e),
    }
}

fn strong_triangle(x: &TruncatedPadicInt, y: &TruncatedPadicInt, z: &TruncatedPadicInt) -> Option<Counterexample> {
    let d = |a: &TruncatedPadicInt, b: &TruncatedPadicInt| a.sub(b).expect("same shape").norm();
    let lhs = d(x, z);
    let rhs = d(x, y).max(d(y, z));
    (lhs > rhs).then(|| {
        violation(
            vec![x.to_string(), y.to_string(), z.to_string()],
            "|x-z| <= max(|x-y|, |y-z|)",
            &lhs,
            &rhs,
        )
    })?
}

fn additive_laws(x: &TruncatedPadicInt, y: &TruncatedPadicInt, z: &TruncatedPadicInt) -> Option<Counterexample> {
    let inputs = || vec![x.to_string(), y.to_string(), z.to_string()];
    let add = |a: &TruncatedPadicInt, b: &TruncatedPadicInt| a.add(b).expect("same shape");
    let (xy, yx) = (add(x, y), add(y, x));
    if xy != yx {
        return violation(inputs(), "x+y = y+x", xy, yx);
    }
    let (left, right) = (add(&xy, z), add(x, &add(y, z)));
    if left != right {
        return violation(inputs(), "(x+y)+z = x+(y+z)", left, right);
    }
    let back = add(&x.sub(y).expect("same shape"), y);
    (&back != x).then(|| violation(inputs(), "(x-y)+y = x", &back, x))?
}

fn point_metric(a: &PadicPoint, b: &PadicPoint) -> Option<Counterexample> {
    let inputs = || vec![a.to_string(), b.to_string()];
    let dab = point_distance(a, b).expect("same shape");
    let dba = point_distance(b, a).expect("same shape");
    if dab != dba {
        return violation(inputs(), "d(a,b) = d(b,a)", dab, dba);
    }
    (dab.is_zero() != (a == b))
        .then(|| violation(inputs(), "d(a,b) = 0 iff a = b", &dab, a == b))?
}

fn padic_superposition(
    label: &str,
    f: &CylinderFunction,
    h: &HFunction,
    weights: WeightConvention,
    x: &PadicPoint,
) -> Option<Counterexample> {
    let rel = "superpose2(build_h(f), x) = f(x)";
    let inputs = || vec![label.to_owned(), x.to_string()];
    let expected = match f.eval_padic(x) {
        Ok(v) => v,
        Err(e) => return failed(inputs(), rel, e),
    };
    match superpose2_with(h, x, weights) {
        Ok(v) if v == expected => None,
        Ok(v) => violation(inputs(), rel, v, expected),
        Err(e) => failed(inputs(), rel, e),
    }
}

fn real_superposition(
    label: &str,
    f: &CylinderFunction,
    g: &GFunction,
    x: &PadicPoint,
) -> Option<Counterexample> {
    let rel = "superpose1(build_g(f), x) = f(x)";
    let inputs = || vec![label.to_owned(), x.to_string()];
    let expected = match f.eval_real(x) {
        Ok(v) => v,
        Err(e) => return failed(inputs(), rel, e),
    };
    match superpose1(g, x) {
        Ok(v) if v.to_bits() == expected.to_bits() => None,
        Ok(v) => violation(inputs(), rel, format!("{v:e}"), format!("{expected:e}")),
        Err(e) => failed(inputs(), rel, e),
    }
}

fn pair_distance(a: &[CantorValue; 2], b: &[CantorValue; 2], constant: &BigRational) -> Option<Counterexample> {
    let rel = format!("|combine(a)-combine(b)| <= {constant}*d(a,b)^2");
    let inputs = || a.iter().chain(b.iter()).map(|c| c.to_string()).collect();
    let (za, zb) = match (combine(a), combine(b)) {
        (Ok(za), Ok(zb)) => (za, zb),
        (Err(e), _) | (_, Err(e)) => return failed(inputs(), &rel, e),
    };
    let lhs = (za.to_rational() - zb.to_rational()).abs();
    let d2 = a
        .iter()
        .zip(b)
        .map(|(u, v)| {
            let diff = u.to_rational() - v.to_rational();
            &diff * &diff
        })
        .fold(BigRational::zero(), |acc, t| acc + t);
    let rhs = constant * d2;
    (lhs > rhs).then(|| violation(inputs(), rel, &lhs, &rhs))?
}

fn interleave_contraction(a: &PadicPoint, b: &PadicPoint) -> Option<Counterexample> {
    let n = a.dimension();
    let za = interleave(a).into_value();
    let zb = interleave(b).into_value();
    let lhs = za.sub(&zb).expect("same shape").norm();
    let rhs = num_traits::pow(point_distance(a, b).expect("same shape"), n);
    (lhs > rhs).then(|| {
        violation(
            vec![a.to_string(), b.to_string()],
            "d(interleave(a), interleave(b)) <= d(a,b)^n",
            &lhs,
            &rhs,
        )
    })?
}

fn deinterleave_prefix(z: &InterleavedPadic, w: &InterleavedPadic) -> Option<Counterexample> {
    let n = z.arity();
    let shared = z.value().common_prefix_len(w.value());
    for k in 0..n {
        let zk = deinterleave_k(z, k).expect("slot below arity");
        let wk = deinterleave_k(w, k).expect("slot below arity");
        let got = zk.common_prefix_len(&wk);
        let need = slot_prefix(shared, n, k);
        if got < need {
            return violation(
                vec![z.value().to_string(), w.value().to_string()],
                format!("shared digits of slot {k} >= floor((N-k+n-1)/n)"),
                got,
                need,
            );
        }
    }
    None
}

fn encode_prefix(x: &TruncatedPadicInt, y: &TruncatedPadicInt, n: usize) -> Option<Counterexample> {
    let inputs = || vec![x.to_string(), y.to_string()];
    let rel = "encode shares N digits and |encode(x)-encode(y)| <= q^(-N)";
    let (ex, ey) = match (cantor_encode(x, n), cantor_encode(y, n)) {
        (Ok(ex), Ok(ey)) => (ex, ey),
        (Err(e), _) | (_, Err(e)) => return failed(inputs(), rel, e),
    };
    let shared = x.common_prefix_len(y);
    let got = ex.common_prefix_len(&ey);
    if got < shared {
        return violation(inputs(), rel, format!("{got} shared digits"), format!("{shared} shared digits"));
    }
    let diff = (ex.to_rational() - ey.to_rational()).abs();
    let bound = inverse_power(ex.base(), shared as i64);
    (diff > bound).then(|| violation(inputs(), rel, &diff, &bound))?
}

fn encode_order(x: &TruncatedPadicInt, y: &TruncatedPadicInt, n: usize) -> Option<Counterexample> {
    let inputs = || vec![x.to_string(), y.to_string()];
    let rel = "x before y in digit order iff encode(x) < encode(y)";
    let (ex, ey) = match (cantor_encode(x, n), cantor_encode(y, n)) {
        (Ok(ex), Ok(ey)) => (ex, ey),
        (Err(e), _) | (_, Err(e)) => return failed(inputs(), rel, e),
    };
    let digit_order = x.digits().cmp(y.digits());
    let value_order = ex.to_rational().cmp(&ey.to_rational());
    (digit_order != value_order)
        .then(|| violation(inputs(), rel, format!("{value_order:?}"), format!("{digit_order:?}")))?
}

fn extract_prefix(z: &CantorValue, w: &CantorValue) -> Option<Counterexample> {
    let n = z.arity();
    let shared = z.common_prefix_len(w);
    for k in 0..n {
        let zk = extract(z, k).expect("slot below arity");
        let wk = extract(w, k).expect("slot below arity");
        let got = zk.common_prefix_len(&wk);
        let need = slot_prefix(shared, n, k);
        if got < need {
            return violation(
                vec![z.to_string(), w.to_string()],
                format!("shared digits of extract(.,{k}) >= floor((N-k+n-1)/n)"),
                got,
                need,
            );
        }
    }
    None
}

fn gap_continuity(label: &str, g: &GFunction, index: u64) -> Option<Counterexample> {
    let inputs = || vec![label.to_owned(), index.to_string()];
    if index + 1 >= g.block_count() {
        return violation(inputs(), "gap index below block count - 1", index, g.block_count() - 1);
    }
    let seg = g.gap(index);
    let ends = [
        ("left", &seg.left, seg.left_value),
        ("right", &seg.right, seg.right_value),
    ];
    for (side, t, table) in ends {
        for (how, value) in [("eval_g", g.eval(t)), ("interpolation", seg.interpolate(t))] {
            match value {
                Ok(v) if v.to_bits() == table.to_bits() => {}
                Ok(v) => {
                    return violation(
                        inputs(),
                        format!("{how} at the {side} end of the gap = table value"),
                        format!("{v:e}"),
                        format!("{table:e}"),
                    )
                }
                Err(e) => return failed(inputs(), "gap endpoint evaluation", e),
            }
        }
    }
    let exact = |v: f64| BigRational::from_float(v).expect("finite");
    let mean = (exact(seg.left_value) + exact(seg.right_value)) / BigRational::from_integer(2.into());
    let mean = num_traits::ToPrimitive::to_f64(&mean).expect("finite");
    match g.eval(&seg.midpoint()) {
        Ok(v) if v.to_bits() == mean.to_bits() => None,
        Ok(v) => violation(inputs(), "g(midpoint) = mean of the end values", format!("{v:e}"), format!("{mean:e}")),
        Err(e) => failed(inputs(), "gap midpoint evaluation", e),
    }
}

fn refinement(label: &str, g: &GFunction, lifted: &GFunction, t: &BigRational) -> Option<Counterexample> {
    let inputs = || vec![label.to_owned(), t.to_string()];
    let rel = "g rebuilt after lifting = g";
    match (lifted.eval(t), g.eval(t)) {
        (Ok(a), Ok(b)) if a.to_bits() == b.to_bits() => None,
        (Ok(a), Ok(b)) => violation(inputs(), rel, format!("{a:e}"), format!("{b:e}")),
        (Err(e), _) | (_, Err(e)) => failed(inputs(), rel, e),
    }
}

/// Loads the function behind a label used in reports: a builtin name, `table:PATH`,
/// `random-real:SEED` or `random-padic:SEED`.
pub fn resolve_function(
    label: &str,
    p: u32,
    n: usize,
    k: usize,
    codomain: Codomain,
) -> Result<CylinderFunction> {
    let want = |found: Codomain| {
        if found == codomain {
            Ok(())
        } else {
            Err(Error::CodomainMismatch {
                expected: codomain.name(),
                found: found.name(),
            })
        }
    };
    let seed = |raw: &str| {
        raw.parse::<u64>()
            .map_err(|_| Error::parse("function label", label, "seed must be an unsigned integer"))
    };
    if let Some(raw) = label.strip_prefix("random-real:") {
        want(Codomain::Real)?;
        return CylinderFunction::random_real(p, n, k, &mut ChaCha8Rng::seed_from_u64(seed(raw)?));
    }
    if let Some(raw) = label.strip_prefix("random-padic:") {
        want(Codomain::Padic)?;
        return CylinderFunction::random_padic(p, n, k, &mut ChaCha8Rng::seed_from_u64(seed(raw)?));
    }
    if let Some(path) = label.strip_prefix("table:") {
        let f = CylinderFunction::load(path)?;
        if (f.p(), f.arity(), f.level()) != (p, n, k) {
            return Err(Error::Config(format!(
                "table {path} has p={} n={} K={}, run has p={p} n={n} K={k}",
                f.p(),
                f.arity(),
                f.level()
            )));
        }
        want(f.codomain())?;
        return Ok(f);
    }
    CylinderFunction::builtin_with_codomain(label.parse::<Builtin>()?, p, n, k, codomain)
}

fn input(cx: &Counterexample, i: usize) -> Result<&str> {
    cx.inputs
        .get(i)
        .map(String::as_str)
        .ok_or_else(|| Error::Config(format!("counterexample has no input {i}")))
}

/// Re-evaluates the relation of `check` on the counterexample's inputs; `true` when it is
/// still violated.
pub fn replay(config: &RunConfig, check: &str, cx: &Counterexample) -> Result<bool> {
    let (p, n, k) = (config.p, config.n, config.k);
    let point = |i| input(cx, i)?.parse::<PadicPoint>();
    let int = |i| input(cx, i)?.parse::<TruncatedPadicInt>();
    let interleaved = |i| InterleavedPadic::new(input(cx, i)?.parse()?, n);
    let cantor = |i, arity| CantorValue::parse(input(cx, i)?, arity);
    let function = |codomain| resolve_function(input(cx, 0)?, p, n, k, codomain);
    let hit = match check {
        "cantor-roundtrip" => cantor_roundtrip(&point(0)?, n),
        "interleave-roundtrip" => interleave_roundtrip(&point(0)?),
        "deinterleave-roundtrip" => deinterleave_roundtrip(&interleaved(0)?),
        "chain-roundtrip" => chain_roundtrip(&point(0)?),
        "combine-extract" => combine_extract(&cantor(0, n)?),
        "interleave-placement" => interleave_placement(&point(0)?),
        "strong-triangle" => strong_triangle(&int(0)?, &int(1)?, &int(2)?),
        "additive-laws" => additive_laws(&int(0)?, &int(1)?, &int(2)?),
        "point-metric" => point_metric(&point(0)?, &point(1)?),
        "real-superposition" => {
            let f = function(Codomain::Real)?;
            real_superposition(input(cx, 0)?, &f, &build_g(&f)?, &point(1)?)
        }
        "padic-superposition" => {
            let f = function(Codomain::Padic)?;
            padic_superposition(input(cx, 0)?, &f, &build_h(&f)?, config.weights, &point(1)?)
        }
        "pair-distance" | "pair-distance-sound" => {
            let a = [cantor(0, 2)?, cantor(1, 2)?];
            let b = [cantor(2, 2)?, cantor(3, 2)?];
            let constant = if check == "pair-distance" {
                squared_distance_constant(p)
            } else {
                squared_distance_constant_sound(p)
            };
            pair_distance(&a, &b, &constant)
        }
        "interleave-contraction" => interleave_contraction(&point(0)?, &point(1)?),
        "deinterleave-prefix" => deinterleave_prefix(&interleaved(0)?, &interleaved(1)?),
        "encode-prefix" => encode_prefix(&int(0)?, &int(1)?, n),
        "encode-order" => encode_order(&int(0)?, &int(1)?, n),
        "extract-prefix" => extract_prefix(&cantor(0, n)?, &cantor(1, n)?),
        "gap-continuity" => {
            let f = function(Codomain::Real)?;
            let index = input(cx, 1)?
                .parse()
                .map_err(|_| Error::parse("gap index", input(cx, 1).unwrap_or(""), "not an integer"))?;
            gap_continuity(input(cx, 0)?, &build_g(&f)?, index)
        }
        "refinement" => {
            let f = function(Codomain::Real)?;
            let raw = input(cx, 1)?;
            let t: BigRational = raw
                .parse()
                .map_err(|_| Error::parse("rational", raw, "expected a/b"))?;
            refinement(input(cx, 0)?, &build_g(&f)?, &build_g(&f.lift()?)?, &t)
        }
        other => return Err(Error::Config(format!("unknown check '{other}'"))),
    };
    Ok(hit.is_some())
}

#[derive(Clone, Copy)]
struct Space {
    p: u32,
    n: usize,
    k: usize,
    q: u32,
    /// `p^K`
    residues: u64,
    /// `p^(nK)`
    points: u64,
}

impl Space {
    fn residue(&self, i: u64) -> TruncatedPadicInt {
        TruncatedPadicInt::from_u64_unchecked(i, self.p, self.k)
    }

    fn point(&self, i: u64) -> PadicPoint {
        PadicPoint::from_index_unchecked(i, self.p, self.n, self.k)
    }

    fn interleaved(&self, i: u64) -> InterleavedPadic {
        let z = TruncatedPadicInt::from_u64_unchecked(i, self.p, self.n * self.k);
        InterleavedPadic::new(z, self.n).expect("precision is a multiple of n")
    }

    fn cantor(&self, i: u64, n: usize, len: usize) -> CantorValue {
        let q = if n == self.n { self.q } else { cantor_base(self.p, n).expect("valid arity") };
        CantorValue::from_prefix_index_unchecked(i, self.p, n, q, len)
    }
}

pub(super) struct Runner<'a> {
    config: &'a RunConfig,
    rng: ChaCha8Rng,
    space: Space,
}

impl<'a> Runner<'a> {
    pub(super) fn new(config: &'a RunConfig) -> Result<Self> {
        let (p, n, k) = (config.p, config.n, config.k);
        Ok(Runner {
            config,
            rng: ChaCha8Rng::seed_from_u64(config.seed),
            space: Space {
                p,
                n,
                k,
                q: cantor_base(p, n)?,
                residues: checked_pow(p, k).expect("validated"),
                points: checked_pow(p, n * k).expect("validated"),
            },
        })
    }

    /// Runs `case` on every index below `count`, or on `samples` seeded draws when `count`
    /// exceeds the exhaustive limit. Results are merged in case order.
    fn cases<F>(&mut self, suite: Suite, check: &str, count: u64, case: F) -> CheckReport
    where
        F: Fn(u64) -> Option<Counterexample> + Sync,
    {
        let (coverage, indices): (_, Vec<u64>) = if count <= EXHAUSTIVE_LIMIT {
            (Coverage::Exhaustive, (0..count).collect())
        } else {
            let rng = &mut self.rng;
            let drawn = (0..self.config.samples).map(|_| rng.gen_range(0..count)).collect();
            (Coverage::Sampled, drawn)
        };
        let results: Vec<Option<Counterexample>> = indices.par_iter().map(|&i| case(i)).collect();
        let mut failure_count = 0;
        let mut failures = Vec::new();
        for (&i, result) in indices.iter().zip(results) {
            if let Some(mut cx) = result {
                failure_count += 1;
                if failures.len() < MAX_RECORDED_FAILURES {
                    cx.case = i;
                    failures.push(cx);
                }
            }
        }
        CheckReport {
            suite: suite.name().into(),
            check: check.into(),
            coverage,
            cases: indices.len() as u64,
            failure_count,
            failures,
            note: None,
        }
    }

    /// The configured function when its codomain matches, otherwise the defaults plus one
    /// seeded random table. `Err` carries the reason for skipping.
    fn functions(&mut self, codomain: Codomain) -> Result<std::result::Result<Vec<(String, CylinderFunction)>, String>> {
        let (p, n, k) = (self.config.p, self.config.n, self.config.k);
        if checked_pow(p, n * k).is_none_or(|c| c > MAX_TABLE_ENTRIES) {
            return Ok(Err(format!("p^(nK) exceeds {MAX_TABLE_ENTRIES} table entries")));
        }
        let labels: Vec<String> = match (&self.config.function, codomain) {
            (Some(spec), _) => {
                let natural = match spec {
                    FunctionSpec::Builtin(b) => b.natural_codomain(),
                    FunctionSpec::Table(path) => Some(CylinderFunction::load(path)?.codomain()),
                };
                if natural.is_some_and(|c| c != codomain) {
                    return Ok(Err(format!("{spec} is not {}-valued", codomain.name())));
                }
                vec![spec.to_string()]
            }
            (None, Codomain::Real) => {
                let mut labels = vec!["norm-product".into(), "digit0-1".into(), "norm-1".into(), "zero".into()];
                labels.push(format!("random-real:{}", self.rng.gen::<u64>()));
                labels
            }
            (None, Codomain::Padic) => {
                let mut labels = vec!["padic-sum".to_owned()];
                labels.extend((1..=n).map(|i| format!("proj-{i}")));
                labels.push("zero".into());
                labels.push(format!("random-padic:{}", self.rng.gen::<u64>()));
                labels
            }
        };
        let functions = labels
            .into_iter()
            .map(|label| {
                let f = resolve_function(&label, p, n, k, codomain)?;
                Ok((label, f))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Ok(functions))
    }

    pub(super) fn run_suite(&mut self, suite: Suite) -> Result<Vec<CheckReport>> {
        let (p, n, k) = (self.config.p, self.config.n, self.config.k);
        let s = self.space;
        let (residues, points) = (s.residues, s.points);
        let mut out = Vec::new();
        match suite {
            Suite::Roundtrip => {
                out.push(self.cases(suite, "cantor-roundtrip", points, |i| {
                    cantor_roundtrip(&s.point(i), n)
                }));
                out.push(self.cases(suite, "interleave-roundtrip", points, |i| {
                    interleave_roundtrip(&s.point(i))
                }));
                out.push(self.cases(suite, "deinterleave-roundtrip", points, |i| {
                    deinterleave_roundtrip(&s.interleaved(i))
                }));
            }
            Suite::Codec => {
                out.push(self.cases(suite, "chain-roundtrip", points, |i| chain_roundtrip(&s.point(i))));
                out.push(self.cases(suite, "combine-extract", points, |i| {
                    combine_extract(&s.cantor(i, n, n * k))
                }));
                out.push(self.cases(suite, "interleave-placement", points, |i| {
                    interleave_placement(&s.point(i))
                }));
            }
            Suite::Ultrametric => {
                let triples = residues * residues * residues;
                let triple = |i: u64| {
                    (
                        s.residue(i / (residues * residues)),
                        s.residue(i / residues % residues),
                        s.residue(i % residues),
                    )
                };
                out.push(self.cases(suite, "strong-triangle", triples, |i| {
                    let (x, y, z) = triple(i);
                    strong_triangle(&x, &y, &z)
                }));
                out.push(self.cases(suite, "additive-laws", triples, |i| {
                    let (x, y, z) = triple(i);
                    additive_laws(&x, &y, &z)
                }));
                out.push(self.cases(suite, "point-metric", points * points, |i| {
                    point_metric(&s.point(i / points), &s.point(i % points))
                }));
            }
            Suite::RealSuperposition => match self.functions(Codomain::Real)? {
                Err(note) => out.push(CheckReport::skipped(suite.name(), "real-superposition", note)),
                Ok(functions) => {
                    let built = functions
                        .iter()
                        .map(|(label, f)| Ok((label.as_str(), f, build_g(f)?)))
                        .collect::<Result<Vec<_>>>()?;
                    let count = built.len() as u64 * points;
                    out.push(self.cases(suite, "real-superposition", count, |i| {
                        let (label, f, g) = &built[(i / points) as usize];
                        real_superposition(label, f, g, &s.point(i % points))
                    }));
                }
            },
            Suite::PadicSuperposition => match self.functions(Codomain::Padic)? {
                Err(note) => out.push(CheckReport::skipped(suite.name(), "padic-superposition", note)),
                Ok(functions) => {
                    let built = functions
                        .iter()
                        .map(|(label, f)| Ok((label.as_str(), f, build_h(f)?)))
                        .collect::<Result<Vec<_>>>()?;
                    let weights = self.config.weights;
                    let count = built.len() as u64 * points;
                    out.push(self.cases(suite, "padic-superposition", count, |i| {
                        let (label, f, h) = &built[(i / points) as usize];
                        padic_superposition(label, f, h, weights, &s.point(i % points))
                    }));
                }
            },
            Suite::PairDistance => {
                if n != 2 {
                    for check in ["pair-distance", "pair-distance-sound"] {
                        out.push(CheckReport::skipped(suite.name(), check, "defined for n = 2 only"));
                    }
                } else {
                    // A pair is two length-K Cantor values; cases are ordered pairs of pairs.
                    let pairs = residues * residues;
                    let pair = |i: u64| [s.cantor(i % residues, 2, k), s.cantor(i / residues, 2, k)];
                    for (check, constant) in [
                        ("pair-distance", squared_distance_constant(p)),
                        ("pair-distance-sound", squared_distance_constant_sound(p)),
                    ] {
                        let mut report = self.cases(suite, check, pairs * pairs, |i| {
                            pair_distance(&pair(i / pairs), &pair(i % pairs), &constant)
                        });
                        report.note = Some(format!("constant {constant}"));
                        out.push(report);
                    }
                }
            }
            Suite::InterleaveDistance => {
                out.push(self.cases(suite, "interleave-contraction", points * points, |i| {
                    interleave_contraction(&s.point(i / points), &s.point(i % points))
                }));
                out.push(self.cases(suite, "deinterleave-prefix", points * points, |i| {
                    deinterleave_prefix(&s.interleaved(i / points), &s.interleaved(i % points))
                }));
            }
            Suite::DigitPrefix => {
                let pairs = residues * residues;
                out.push(self.cases(suite, "encode-prefix", pairs, |i| {
                    encode_prefix(&s.residue(i / residues), &s.residue(i % residues), n)
                }));
                out.push(self.cases(suite, "encode-order", pairs, |i| {
                    encode_order(&s.residue(i / residues), &s.residue(i % residues), n)
                }));
                out.push(self.cases(suite, "extract-prefix", points * points, |i| {
                    extract_prefix(&s.cantor(i / points, n, n * k), &s.cantor(i % points, n, n * k))
                }));
            }
            Suite::Extension => {
                if n == 1 {
                    out.push(CheckReport::skipped(suite.name(), "gap-continuity", "no gaps when n = 1"));
                    return Ok(out);
                }
                match self.functions(Codomain::Real)? {
                    Err(note) => out.push(CheckReport::skipped(suite.name(), "gap-continuity", note)),
                    Ok(functions) => {
                        let built = functions
                            .iter()
                            .map(|(label, f)| Ok((label.as_str(), build_g(f)?)))
                            .collect::<Result<Vec<_>>>()?;
                        let gaps = points - 1;
                        let count = built.len() as u64 * gaps;
                        out.push(self.cases(suite, "gap-continuity", count, |i| {
                            let (label, g) = &built[(i / gaps) as usize];
                            gap_continuity(label, g, i % gaps)
                        }));
                    }
                }
            }
            Suite::Refinement => {
                let finer = checked_pow(p, n * (k + 1)).expect("validated");
                if finer > MAX_TABLE_ENTRIES {
                    out.push(CheckReport::skipped(
                        suite.name(),
                        "refinement",
                        format!("p^(n(K+1)) exceeds {MAX_TABLE_ENTRIES} table entries"),
                    ));
                    return Ok(out);
                }
                match self.functions(Codomain::Real)? {
                    Err(note) => out.push(CheckReport::skipped(suite.name(), "refinement", note)),
                    Ok(functions) => {
                        let built = functions
                            .iter()
                            .map(|(label, f)| Ok((label.as_str(), build_g(f)?, build_g(&f.lift()?)?)))
                            .collect::<Result<Vec<_>>>()?;
                        // Every left endpoint of a finer block lies in a level-K block.
                        let count = built.len() as u64 * finer;
                        out.push(self.cases(suite, "refinement", count, |i| {
                            let (label, g, lifted) = &built[(i / finer) as usize];
                            let (t, _) = lifted.block_bounds(i % finer);
                            refinement(label, g, lifted, &t)
                        }));
                    }
                }
            }
        }
        Ok(out)
    }
}
