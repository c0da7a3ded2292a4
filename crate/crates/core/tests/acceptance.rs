//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any fails.

use std::collections::BTreeMap;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use torus_coloring::arith::{gcd, is_prime, odd_primes_up_to};
use torus_coloring::coloring::{
    brute_force_search, decide_by_criterion, for_each_coloring, harlequin, verify_tuple_ii, verify_tuple_iii,
    DEFAULT_BUDGET,
};
use torus_coloring::experiments::{crosscheck, Agreement};
use torus_coloring::families::{
    classify_gl2, is_irreducible, predicate, type4_recurrence, type4_yn_closed_form, MatrixType,
};
use torus_coloring::field::FieldElement;
use torus_coloring::group::CayleyTable;
use torus_coloring::quandle::{centralizer_grows, quandle_op};
use torus_coloring::transforms::{contract_strands, extend_strands, extend_twists};
use torus_coloring::{ColoringTuple, GroupContext, GroupElement, SearchOptions, TorusKnot};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ctx(s: &str) -> GroupContext {
    s.parse().unwrap()
}

fn s3_example() -> ColoringTuple {
    ColoringTuple::parse(ctx("S:3"), &["(2 3)", "(1 2)", "(1 3)"]).unwrap()
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let elapsed = start.elapsed();
    if elapsed > limit {
        return Err(format!("took {elapsed:?}, limit {limit:?}"));
    }
    Ok(elapsed)
}

fn oracle(g: &GroupContext, m: u64, n: u64) -> bool {
    brute_force_search(g, TorusKnot::new(m, n).unwrap(), SearchOptions::default()).unwrap().colorable
}

fn known_instances() -> Outcome {
    let start = Instant::now();
    let s3 = ctx("S:3");
    let v = brute_force_search(&s3, TorusKnot::new(2, 3).unwrap(), SearchOptions::default()).unwrap();
    ensure!(v.colorable, "K(2,3) reported not colorable");
    let w = v.witness_tuple().ok_or("no witness tuple")?;
    ensure!(verify_tuple_iii(w, 2).unwrap() && !w.is_trivial(), "witness {w} does not verify");
    ensure!(verify_tuple_iii(&s3_example(), 2).unwrap(), "example tuple does not verify");
    let full = SearchOptions { symmetry_reduction: false, ..SearchOptions::default() };
    let v = brute_force_search(&s3, TorusKnot::new(2, 5).unwrap(), full).unwrap();
    ensure!(!v.colorable, "K(2,5) reported colorable: {:?}", v.witness);
    let t = within(start, Duration::from_secs(1))?;
    Ok(format!("K(2,3) colorable, K(2,5) not over all 6^5 tuples ({t:.1?})"))
}

fn extension_contraction() -> Outcome {
    let s3 = ctx("S:3");
    let long = extend_strands(&s3_example(), 2, 5).map_err(|e| e.to_string())?;
    ensure!(long.n() == 15 && verify_tuple_iii(&long.tuple, 2).unwrap(), "K(2,15) tuple does not verify");
    let short = contract_strands(&long.tuple, 5, 3, 2).map_err(|e| e.to_string())?;
    let expected = vec![s3.parse_element("(1 2)").unwrap(); 5];
    ensure!(short.tuple.colors() == expected.as_slice(), "contraction gave {}", short.tuple);
    Ok("15-tuple verifies for K(2,15); contraction is (1 2) x 5".into())
}

fn random_tuple(rng: &mut ChaCha8Rng, elems: &[GroupElement], g: GroupContext, n: usize) -> ColoringTuple {
    let colors = (0..n).map(|_| elems[rng.gen_range(0..elems.len())].clone()).collect();
    ColoringTuple::new(g, colors).unwrap()
}

fn characterization_equivalence() -> Outcome {
    let start = Instant::now();
    let s3 = ctx("S:3");
    let elems = s3.elements().unwrap();
    let mut checked = 0usize;
    let mut positives = 0usize;
    for m in [2u64, 4, 5] {
        for a in &elems {
            for b in &elems {
                for c in &elems {
                    let t = ColoringTuple::new(s3, vec![a.clone(), b.clone(), c.clone()]).unwrap();
                    let ii = verify_tuple_ii(&t, m).unwrap();
                    ensure!(ii == verify_tuple_iii(&t, m).unwrap(), "mismatch on {t} for m={m}");
                    checked += 1;
                    positives += ii as usize;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for g in [ctx("D:6"), ctx("GL2:3")] {
        let elems = g.elements().unwrap();
        for (m, n) in [(2u64, 3usize), (2, 5), (3, 5)] {
            for _ in 0..10_000 {
                let t = random_tuple(&mut rng, &elems, g, n);
                let ii = verify_tuple_ii(&t, m).unwrap();
                ensure!(ii == verify_tuple_iii(&t, m).unwrap(), "mismatch on {t} over {g} for m={m}");
                checked += 1;
                positives += ii as usize;
            }
            // every genuine solution must pass (iii) as well
            let mut bad = None;
            for_each_coloring(&g, TorusKnot::new(m, n as u64).unwrap(), DEFAULT_BUDGET, |t| {
                if bad.is_none() && !verify_tuple_iii(t, m).unwrap() {
                    bad = Some(t.clone());
                }
                positives += 1;
                checked += 1;
            })
            .unwrap();
            ensure!(bad.is_none(), "solution {} of (ii) fails (iii)", bad.unwrap());
        }
    }
    let t = within(start, Duration::from_secs(10))?;
    Ok(format!("{checked} tuples, {positives} satisfying both, zero mismatches ({t:.1?})"))
}

fn predicate_criterion_grid() -> Outcome {
    let start = Instant::now();
    let mut cells = Vec::new();
    for q in [2u32, 3, 5, 7] {
        for p in odd_primes_up_to(31) {
            cells.push((GroupContext::gl2(q).unwrap(), p));
            cells.push((GroupContext::sl2(q).unwrap(), p));
        }
    }
    for n in 1..=15 {
        for p in odd_primes_up_to(13) {
            cells.push((GroupContext::dihedral(n).unwrap(), p));
        }
    }
    for n in 1..=6 {
        for p in odd_primes_up_to(13) {
            cells.push((GroupContext::symmetric(n).unwrap(), p));
        }
    }
    let mut positive = 0;
    for (g, p) in &cells {
        let pred = predicate(g, *p).unwrap();
        let crit = decide_by_criterion(g, *p).unwrap().colorable;
        ensure!(pred == crit, "{g}, p={p}: predicate {pred}, criterion {crit}");
        positive += pred as usize;
    }
    let t = within(start, Duration::from_secs(120))?;
    Ok(format!("{} cells agree, {positive} positive ({t:.1?})", cells.len()))
}

fn per_type_centralizers() -> Outcome {
    let mut checked = 0;
    for q in [2u32, 3, 5] {
        let g = GroupContext::gl2(q).unwrap();
        let table = CayleyTable::new(g).unwrap();
        let reps: Vec<GroupElement> =
            table.class_representatives().into_iter().map(|i| table.element(i).clone()).collect();
        for p in odd_primes_up_to(13) {
            let q64 = q as u64;
            let mut grows_by_type: BTreeMap<u8, bool> = BTreeMap::new();
            for u in &reps {
                let m = *u.as_matrix().unwrap();
                let ty = classify_gl2(&m).unwrap();
                let grows = centralizer_grows(u, p, &g).unwrap().is_some();
                let expected = !matches!(ty, MatrixType::Type1 { .. }) && m.pow(p).is_scalar();
                ensure!(grows == expected, "GL2:{q} u={m} p={p}: grows={grows}");
                *grows_by_type.entry(ty.index()).or_default() |= grows;
                checked += 1;
            }
            let conditions = [(1u8, false), (2, (q64 - 1) % p == 0), (3, p == q64), (4, (q64 + 1) % p == 0)];
            for (ty, condition) in conditions {
                let some = grows_by_type.get(&ty).copied().unwrap_or(false);
                ensure!(some == condition, "GL2:{q} type {ty} p={p}: some rep grows = {some}, condition {condition}");
            }
        }
    }
    Ok(format!("{checked} (representative, p) cells match their type condition"))
}

fn type4_numerics() -> Outcome {
    let start = Instant::now();
    let mut compared = 0;
    for q in [3u32, 5, 7, 11, 13] {
        for a in 0..q as i64 {
            for b in 0..q as i64 {
                let (fa, fb) = (FieldElement::new(a, q), FieldElement::new(b, q));
                if !is_irreducible(fa, fb) {
                    continue;
                }
                for n in 0..=60 {
                    let rec = type4_recurrence(fa, fb, n).unwrap().y;
                    let closed = type4_yn_closed_form(fa, fb, n).unwrap().value();
                    ensure!(rec == closed, "q={q} a={a} b={b} n={n}: recurrence {rec}, closed form {closed}");
                    compared += 1;
                }
            }
        }
    }
    // y_(p-1) = 0 forces p | q+1 for every irreducible (a, b); conversely
    // p | q+1 gives some (a, b) with y_(p-1) = 0, though not every one
    let primes: Vec<u64> = odd_primes_up_to(23);
    let mut not_vanishing = 0;
    for &q in &primes {
        let q32 = q as u32;
        for &p in &primes {
            let divides = (q + 1) % p == 0;
            let mut some = false;
            for a in 0..q as i64 {
                for b in 0..q as i64 {
                    let (fa, fb) = (FieldElement::new(a, q32), FieldElement::new(b, q32));
                    if !is_irreducible(fa, fb) {
                        continue;
                    }
                    let vanishes = type4_recurrence(fa, fb, p - 1).unwrap().y == 0;
                    ensure!(!vanishes || divides, "q={q} p={p} a={a} b={b}: y_(p-1)=0 but p does not divide q+1");
                    some |= vanishes;
                    not_vanishing += (divides && !vanishes) as usize;
                }
            }
            ensure!(some == divides, "q={q} p={p}: some y_(p-1)=0 is {some}, p | q+1 is {divides}");
        }
    }
    let one = FieldElement::new(1, 2);
    for n in 0..=60u64 {
        let zero = type4_recurrence(one, one, n).unwrap().y == 0;
        ensure!(zero == (n % 3 == 2), "q=2: y_{n} = 0 is {zero}");
    }
    let t = within(start, Duration::from_secs(10))?;
    Ok(format!(
        "{compared} closed-form values exact; vanishing law holds, {not_vanishing} pairs with p | q+1 keep y_(p-1) != 0 ({t:.1?})"
    ))
}

fn necessity_direction() -> Outcome {
    let mut groups = vec![ctx("S:3"), ctx("S:4"), ctx("GL2:2"), ctx("GL2:3")];
    groups.extend((3..=8).map(|n| GroupContext::dihedral(n).unwrap()));
    let mut instances = 0;
    let mut colorable = 0;
    for g in &groups {
        for n in [3u64, 5] {
            for m in 1..=7u64 {
                if gcd(m, n) != 1 {
                    continue;
                }
                instances += 1;
                if oracle(g, m, n) {
                    colorable += 1;
                    ensure!(decide_by_criterion(g, n).unwrap().colorable, "{g} K({m},{n}) colorable, criterion false");
                }
            }
        }
    }
    Ok(format!("{instances} instances searched, {colorable} colorable, all with criterion true"))
}

fn gap_surfacing() -> Outcome {
    let s3 = ctx("S:3");
    let rows = crosscheck(&[s3], &[2, 4, 5, 7], &[3], SearchOptions::default()).map_err(|e| e.to_string())?;
    ensure!(rows.len() == 4, "expected 4 rows, got {}", rows.len());
    let twice = extend_twists(&s3_example(), 2, 2).map_err(|e| e.to_string())?;
    ensure!(verify_tuple_iii(&twice.tuple, 4).unwrap(), "extend_twists tuple fails for K(4,3)");
    let mut report = Vec::new();
    for r in &rows {
        let o = r.oracle.ok_or(format!("m={} did not finish within budget", r.m))?;
        if r.m == 2 || r.m == 4 {
            ensure!(o, "oracle says K({},3) is not colorable", r.m);
        }
        let expected =
            if r.criterion == o && r.predicate.map_or(true, |p| p == o) { Agreement::Agree } else { Agreement::Disagreement };
        ensure!(r.agree == expected, "m={}: flagged {:?}, expected {expected:?}", r.m, r.agree);
        if r.criterion && !o {
            ensure!(r.agree == Agreement::Disagreement, "m={} criterion true, oracle false, not flagged", r.m);
        }
        report.push(format!("m={}:{:?}", r.m, r.agree));
    }
    Ok(report.join(" "))
}

fn small_groups() -> Vec<GroupContext> {
    let mut out: Vec<GroupContext> = (1..=4).map(|n| GroupContext::symmetric(n).unwrap()).collect();
    out.extend((1..=30).map(|n| GroupContext::dihedral(n).unwrap()));
    for q in [2, 3] {
        out.push(GroupContext::gl2(q).unwrap());
        out.push(GroupContext::sl2(q).unwrap());
    }
    out.retain(|g| g.order() <= 60);
    out
}

fn algebraic_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0ffee);
    for g in [ctx("S:5"), ctx("D:12"), ctx("GL2:5"), ctx("SL2:5")] {
        let elems = g.elements().unwrap();
        let pick = |rng: &mut ChaCha8Rng| elems[rng.gen_range(0..elems.len())].clone();
        let op = |a: &GroupElement, b: &GroupElement| quandle_op(a, b, &g).unwrap();
        let mul = |a: &GroupElement, b: &GroupElement| g.mul(a, b).unwrap();
        for _ in 0..1000 {
            let (x, x1, x2, y, y1, y2) = (pick(&mut rng), pick(&mut rng), pick(&mut rng), pick(&mut rng), pick(&mut rng), pick(&mut rng));
            let k = rng.gen_range(-6i64..=6);
            ensure!(op(&mul(&x1, &x2), &y) == mul(&op(&x1, &y), &op(&x2, &y)), "{g}: product identity");
            ensure!(op(&g.pow(&x, k).unwrap(), &y) == g.pow(&op(&x, &y), k).unwrap(), "{g}: power identity k={k}");
            ensure!(op(&x, &mul(&y1, &y2)) == op(&op(&x, &y2), &y1), "{g}: composition identity");
            let mut iterated = x.clone();
            let inv = g.inverse(&y).unwrap();
            for _ in 0..k.unsigned_abs() {
                iterated = op(&iterated, if k >= 0 { &y } else { &inv });
            }
            ensure!(op(&x, &g.pow(&y, k).unwrap()) == iterated, "{g}: iterated identity k={k}");
        }
    }
    let groups = small_groups();
    let primes: Vec<u64> = (2..=13).filter(|&p| is_prime(p)).collect();
    for g in &groups {
        let elems = g.elements().unwrap();
        for u in &elems {
            for &p in &primes {
                let up = g.pow(u, p as i64).unwrap();
                for x in &elems {
                    let commutes_u = g.mul(x, u).unwrap() == g.mul(u, x).unwrap();
                    let commutes_up = g.mul(x, &up).unwrap() == g.mul(&up, x).unwrap();
                    ensure!(!commutes_u || commutes_up, "{g}: {x} in C({u}) but not C({u}^{p})");
                }
            }
        }
    }
    for p in [2, 3, 5, 7] {
        let a = decide_by_criterion(&ctx("GL2:2"), p).unwrap().colorable;
        let b = decide_by_criterion(&ctx("S:3"), p).unwrap().colorable;
        ensure!(a == b, "p={p}: GL2:2 {a}, S:3 {b}");
    }
    Ok(format!("4000 identity samples, containment over {} groups, GL2:2 matches S:3", groups.len()))
}

fn reduction_propositions() -> Outcome {
    let s3 = ctx("S:3");
    let nine = extend_strands(&s3_example(), 2, 3).map_err(|e| e.to_string())?;
    ensure!(nine.n() == 9 && !nine.is_trivial() && verify_tuple_iii(&nine.tuple, 2).unwrap(), "K(2,9) tuple fails");
    let k23 = oracle(&s3, 2, 3);
    ensure!(k23, "K(2,3) not colorable");
    let fifteen = extend_strands(&s3_example(), 2, 5).map_err(|e| e.to_string())?;
    let k215 = verify_tuple_iii(&fifteen.tuple, 2).unwrap() && !fifteen.is_trivial();
    let k25 = oracle(&s3, 2, 5);
    ensure!(k215 && !k25, "K(2,15) colorable={k215}, K(2,5) colorable={k25}");
    ensure!(k215 == (k23 || k25), "K(2,15) is not the disjunction of K(2,3) and K(2,5)");
    ensure!(harlequin(&nine.tuple, 2).unwrap() == harlequin(&s3_example(), 2).unwrap(), "harlequin changed");
    Ok("K(2,9) and K(2,15) colorable via strand extension, K(2,5) not".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("known instance regression", known_instances),
        ("extension/contraction regression", extension_contraction),
        ("characterization equivalence", characterization_equivalence),
        ("family predicate vs criterion", predicate_criterion_grid),
        ("per-type centralizer growth", per_type_centralizers),
        ("type-4 numerics", type4_numerics),
        ("necessity direction", necessity_direction),
        ("gap surfacing", gap_surfacing),
        ("algebraic identities", algebraic_identities),
        ("reduction propositions", reduction_propositions),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    if failures == 0 {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}
