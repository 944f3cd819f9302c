//! Acceptance suite: one line per criterion, `PASS` or `FAIL`, with the
//! measured time against its limit. Exits nonzero if any criterion fails.

use polyreal::closure::{compare_closure, verify_safe_closed};
use polyreal::cone::{enumerate_points, kostant, simplify, weights_up_to, Constraint};
use polyreal::linform::apply_s;
use polyreal::tableaux::{check_box_recurrences, enumerate_tab, tableau_s_action};
use polyreal::{
    build_cone, check_positivity, compare_with_tableaux, compute_closure, generate_binfty,
    AdaptedSequence, CartanData, ClosureOptions, Form, InequalitySystem, Orientation, Positivity,
    SequenceSpec, Var,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::collections::{BTreeSet, HashMap};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

type Check = Result<String, String>;

fn form(s: &str) -> Form {
    s.parse().unwrap()
}

fn adapted(ty: &str, period: &[usize]) -> AdaptedSequence {
    AdaptedSequence::from_spec(
        &SequenceSpec::periodic(ty.parse().unwrap(), period.to_vec()).unwrap(),
    )
    .unwrap()
}

fn configs(types: &[&str]) -> Vec<AdaptedSequence> {
    types
        .iter()
        .flat_map(|ty| {
            let c: CartanData = ty.parse().unwrap();
            Orientation::all(&c)
                .into_iter()
                .map(move |o| AdaptedSequence::from_orientation(&c, o))
        })
        .collect()
}

const SWEEP: [&str; 9] = ["A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D4"];

fn label(seq: &AdaptedSequence) -> String {
    format!("{} [{}]", seq.cartan().name(), seq.orientation())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn normal_form(
    seq: &AdaptedSequence,
    display: &[&str],
    zero: &[(usize, usize)],
) -> InequalitySystem {
    simplify(&InequalitySystem {
        kind: seq.kind(),
        rank: seq.rank(),
        rows: seq.rank(),
        constraints: display
            .iter()
            .map(|t| Constraint {
                form: form(t),
                sources: vec![],
            })
            .collect(),
        zero_vars: zero.iter().map(|&(r, c)| Var::new(r, c)).collect(),
    })
}

fn cone_matches(
    seq: &AdaptedSequence,
    display: &[&str],
    zero: &[(usize, usize)],
) -> Result<usize, String> {
    let ours = build_cone(seq);
    let theirs = normal_form(seq, display, zero);
    let a: BTreeSet<&Form> = ours.forms().collect();
    let b: BTreeSet<&Form> = theirs.forms().collect();
    ensure(a == b, || {
        let only_ours: Vec<String> = a.difference(&b).map(|f| f.to_string()).collect();
        let only_theirs: Vec<String> = b.difference(&a).map(|f| f.to_string()).collect();
        format!("cone differs: ours only {only_ours:?}, display only {only_theirs:?}")
    })?;
    ensure(ours.zero_vars == theirs.zero_vars, || {
        format!(
            "zero variables differ: {:?} vs {:?}",
            ours.zero_vars, theirs.zero_vars
        )
    })?;
    Ok(a.len())
}

fn closure_equals_tab(seq: &AdaptedSequence, window: usize) -> Result<String, String> {
    let c = compare_with_tableaux::<i64>(seq.sequence(), ClosureOptions::new(window))
        .map_err(|e| e.to_string())?;
    ensure(c.equal, || {
        format!(
            "closure != Tab: {} missing from closure, {} not tableau forms",
            c.missing_from_closure.len(),
            c.missing_from_tab.len()
        )
    })?;
    Ok(format!(
        "{} forms in rows <= {}",
        c.closure_size, c.safe_rows
    ))
}

fn c1() -> Check {
    let seq = adapted("A2", &[1, 2]);
    let closure = compute_closure::<i64>(seq.sequence(), ClosureOptions::new(6));
    let mut expect = BTreeSet::new();
    for k in 1..=6usize {
        for s in [
            format!("x[{k},1]"),
            format!("x[{k},2] - x[{},1]", k + 1),
            format!("-x[{},2]", k + 1),
            format!("x[{k},2]"),
            format!("x[{},1] - x[{},2]", k + 1, k + 1),
            format!("-x[{},1]", k + 2),
        ] {
            let phi = form(&s);
            if phi.max_row() <= closure.safe_rows {
                expect.insert(phi);
            }
        }
    }
    let safe: BTreeSet<Form> = closure.safe().into_iter().collect();
    ensure(safe == expect, || {
        format!("safe set {safe:?} != families {expect:?}")
    })?;
    let cone = build_cone(&seq);
    let got: BTreeSet<Form> = cone.forms().cloned().collect();
    let want: BTreeSet<Form> = ["x[1,2] - x[2,1]", "x[2,1]", "x[1,1]"]
        .iter()
        .map(|s| form(s))
        .collect();
    ensure(got == want, || format!("cone {got:?}"))?;
    ensure(cone.zero_vars == BTreeSet::from([Var::new(2, 2)]), || {
        format!("zero vars {:?}", cone.zero_vars)
    })?;
    Ok(format!(
        "{} safe forms; cone x12 >= x21 >= 0, x11 >= 0, x22 = 0",
        safe.len()
    ))
}

fn c2() -> Check {
    let seq = adapted("A3", &[2, 1, 3]);
    let closure = closure_equals_tab(&seq, 8)?;
    let display = [
        "x[2,2] - x[2,1] - x[2,3]",
        "x[2,3]",
        "x[1,3] + x[1,1] - x[2,2]",
        "x[2,2]",
        "x[1,1] - x[2,3]",
        "x[1,3] - x[2,1]",
        "x[2,1]",
        "x[1,2]",
    ];
    let n = cone_matches(&seq, &display, &[(3, 1), (3, 2), (3, 3)])?;
    Ok(format!("{closure}; cone normal form {n} constraints"))
}

fn c3() -> Check {
    let seq = adapted("C3", &[2, 1, 3]);
    let closure = closure_equals_tab(&seq, 8)?;
    let r = compute_closure::<i64>(seq.sequence(), ClosureOptions::new(8));
    for s in 1..=3usize {
        let phi = form(&format!("2x[{},3] - x[{},2]", s + 1, s + 2));
        ensure(r.contains(&phi), || format!("{phi} missing"))?;
    }
    let display = [
        "x[2,2] - x[2,1]",
        "x[2,1]",
        "2x[2,3] - x[3,2]",
        "x[3,2] - x[3,1]",
        "x[3,1]",
        "x[3,2] - 2x[3,3]",
        "2x[1,3] - x[2,2] + x[1,1]",
        "x[1,1] + x[2,2] - 2x[2,3]",
        "x[1,1] + x[2,1] - x[3,2]",
        "x[1,1] - x[3,1]",
        "2x[1,3] - x[2,1]",
        "2x[2,2] - x[2,1] - 2x[2,3]",
        "x[2,2] - x[3,2]",
        "x[2,2] - x[2,1] - x[3,1]",
        "2x[2,3] - 2x[3,2] + x[2,1]",
        "2x[2,3] - x[3,2] - x[3,1]",
        "x[2,1] - 2x[3,3]",
        "x[3,2] - 2x[3,3] - x[3,1]",
        "x[2,2] - x[2,3]",
        "x[2,3] + x[2,1] - x[3,2]",
        "x[2,3] - x[3,1]",
        "x[2,1] - x[3,3]",
        "x[3,3]",
        "x[3,2] - x[3,1] - x[3,3]",
        "x[1,2]",
        "x[1,3]",
    ];
    let n = cone_matches(&seq, &display, &[])?;
    Ok(format!(
        "{closure}; coefficient-2 forms present; cone normal form {n} constraints"
    ))
}

fn c4() -> Check {
    let seq = SequenceSpec::periodic("A3".parse().unwrap(), vec![1, 2, 3, 2]).unwrap();
    let closure = compute_closure::<i64>(&seq, ClosureOptions::new(5));
    match check_positivity(closure.forms()) {
        Positivity::Pass => Err("positivity passed".into()),
        Positivity::Witness { form, .. } => {
            let text = form.single_index(&seq);
            ensure(text == "x1 - x2 + x3 - x4", || format!("witness {text}"))?;
            let d = closure.derivation(&form).unwrap();
            let ks: Vec<usize> = d.word.iter().map(|&(m, i)| seq.position(m, i)).collect();
            let seed = seq.position(d.seed.row, d.seed.col);
            ensure(ks == [1, 2, 5] && seed == 1, || {
                format!("derivation {ks:?} from x{seed}")
            })?;
            Ok(format!("witness {text} = S5 S2 S1 x1"))
        }
    }
}

struct SweepEntry {
    label: String,
    equal: bool,
    closure_positive: bool,
    safe_closed: bool,
}

fn c5(store: &mut Vec<SweepEntry>) -> Check {
    let seqs = configs(&SWEEP);
    let results: Vec<SweepEntry> = seqs
        .iter()
        .map(|seq| {
            let w = seq.rank() + 5;
            let closure = compute_closure::<i64>(
                seq.sequence(),
                ClosureOptions {
                    parallel: true,
                    ..ClosureOptions::new(w)
                },
            );
            let cmp = compare_closure(seq, &closure);
            SweepEntry {
                label: label(seq),
                equal: cmp.equal && cmp.safe_rows == 3,
                closure_positive: check_positivity(closure.forms()).passed(),
                safe_closed: verify_safe_closed(seq.sequence(), &closure).is_empty(),
            }
        })
        .collect();
    *store = results;
    let bad: Vec<&str> = store
        .iter()
        .filter(|e| !e.equal || !e.safe_closed)
        .map(|e| e.label.as_str())
        .collect();
    ensure(bad.is_empty(), || format!("unequal: {bad:?}"))?;
    Ok(format!(
        "{} configurations equal at W = rank + 5",
        store.len()
    ))
}

fn c6(store: &[SweepEntry]) -> Check {
    ensure(!store.is_empty(), || "sweep did not run".into())?;
    let mut tableaux = 0;
    for seq in configs(&SWEEP) {
        let tabs = enumerate_tab(&seq, 8);
        tableaux += tabs.len();
        let forms: Vec<Form> = tabs.iter().map(|t| t.expand(&seq)).collect();
        if let Positivity::Witness { form, column } = check_positivity(forms.iter()) {
            return Err(format!("{}: {form} negative at x[1,{column}]", label(&seq)));
        }
    }
    let bad: Vec<&str> = store
        .iter()
        .filter(|e| !e.closure_positive)
        .map(|e| e.label.as_str())
        .collect();
    ensure(bad.is_empty(), || format!("closure not positive: {bad:?}"))?;
    Ok(format!(
        "{tableaux} tableaux (rows <= 8) and all sweep closures nonnegative in row 1"
    ))
}

fn c7() -> Check {
    let mut checked = 0usize;
    for seq in configs(&SWEEP) {
        for t in enumerate_tab(&seq, 8) {
            let phi: Form = t.expand(&seq);
            for m in 1..=8 {
                for j in seq.cartan().indices() {
                    let fast = tableau_s_action(&seq, &t, m, j);
                    let slow = apply_s(seq.sequence(), m, j, &phi);
                    checked += 1;
                    ensure(
                        fast.expand::<i64>(&seq) == slow && fast.is_admissible(&seq),
                        || format!("{}: S[{m},{j}] on {t}", label(&seq)),
                    )?;
                }
            }
        }
    }
    Ok(format!("{checked} tableau actions agree"))
}

fn c8() -> Check {
    let mut checked = 0;
    for seq in configs(&SWEEP) {
        let r = check_box_recurrences(&seq, -10..=6);
        checked += r.checked;
        ensure(r.passed(), || {
            format!("{}: {:?}", label(&seq), r.failures.first())
        })?;
    }
    Ok(format!("{checked} identities hold"))
}

fn c9() -> Check {
    let depth = 6;
    let mut seqs = vec![
        adapted("A2", &[1, 2]),
        adapted("A3", &[2, 1, 3]),
        adapted("B2", &[1, 2]),
        adapted("C2", &[1, 2]),
    ];
    seqs.extend(configs(&["D4"]));
    let mut points = 0;
    for seq in &seqs {
        let n = seq.rank();
        let graph = generate_binfty(seq.sequence(), depth, true);
        let cone = build_cone(seq);
        points += graph.points.len();
        for p in &graph.points {
            ensure(cone.member(p) && p.max_row() <= n, || {
                format!("{}: {p} not in the cone", label(seq))
            })?;
        }
        let counts: HashMap<_, _> = graph.weight_counts(n);
        for mu in weights_up_to(n, depth as i64) {
            let generated = counts.get(&mu).copied().unwrap_or(0) as u64;
            let lattice = enumerate_points(&cone, &mu).len() as u64;
            let k = kostant(seq.kind(), n, &mu);
            ensure(generated == k && lattice == k, || {
                format!(
                    "{} weight {mu}: generated {generated}, lattice {lattice}, Kostant {k}",
                    label(seq)
                )
            })?;
        }
    }
    Ok(format!(
        "{} configurations, {points} points, counts agree per weight",
        seqs.len()
    ))
}

fn c10() -> Check {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let seqs = configs(&SWEEP);
    let mut tested = 0;
    while tested < 10_000 {
        let seq = &seqs[rng.gen_range(0..seqs.len())];
        let n = seq.rank();
        let mut phi = Form::var(rng.gen_range(1..=6), rng.gen_range(1..=n));
        for _ in 0..rng.gen_range(0..6) {
            let v = {
                let support: Vec<Var> = phi.support().collect();
                support[rng.gen_range(0..support.len())]
            };
            let next = apply_s(seq.sequence(), v.row, v.col, &phi);
            if next.is_zero() {
                break;
            }
            phi = next;
        }
        let (m, j) = if rng.gen_bool(0.5) && !phi.is_zero() {
            let support: Vec<Var> = phi.support().collect();
            let v = support[rng.gen_range(0..support.len())];
            (v.row, v.col)
        } else {
            (rng.gen_range(1..=10), rng.gen_range(1..=n))
        };
        let once = apply_s(seq.sequence(), m, j, &phi);
        let twice = apply_s(seq.sequence(), m, j, &once);
        ensure(once == twice, || {
            format!("{}: S[{m},{j}] not idempotent on {phi}", label(seq))
        })?;
        tested += 1;
    }

    let render = |parallel: bool| -> String {
        let seq = adapted("C3", &[2, 1, 3]);
        let closure = compute_closure::<i64>(
            seq.sequence(),
            ClosureOptions {
                parallel,
                ..ClosureOptions::new(7)
            },
        );
        let mut out = String::new();
        for f in closure.forms() {
            out.push_str(&format!("{f} {:?}\n", closure.derivation(f)));
        }
        out.push_str(&generate_binfty(seq.sequence(), 5, parallel).to_dot());
        out.push_str(&build_cone(&seq).to_string());
        out
    };
    let first = render(false);
    ensure(first == render(false), || "serial runs differ".into())?;
    ensure(first == render(true), || "parallel run differs".into())?;
    Ok(format!(
        "{tested} random forms idempotent; repeated and parallel runs byte-identical"
    ))
}

fn main() -> ExitCode {
    let mut sweep = Vec::new();
    let mut failed = 0;
    let mut run = |n: usize, title: &str, limit_secs: u64, f: &mut dyn FnMut() -> Check| {
        let limit = Duration::from_secs(limit_secs);
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        let took = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if took <= limit => (true, d),
            Ok(d) => (false, format!("{d}; over the time limit")),
            Err(e) => (false, e),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {n:>2} {} [{:.2}s / {}s] {title}: {detail}",
            if ok { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            limit_secs
        );
    };
    run(1, "A2 golden", 1, &mut c1);
    run(2, "A3 golden", 5, &mut c2);
    run(3, "C3 golden", 10, &mut c3);
    run(4, "negative control", 1, &mut c4);
    run(5, "closure equals tableaux, desk scale", 600, &mut || {
        c5(&mut sweep)
    });
    run(6, "row-1 positivity, desk scale", 600, &mut || c6(&sweep));
    run(7, "fast action oracle", 600, &mut c7);
    run(8, "box recurrences", 600, &mut c8);
    run(9, "crystal, cone and Kostant agree", 900, &mut c9);
    run(10, "idempotence and determinism", 600, &mut c10);
    if failed == 0 {
        println!("acceptance: all 10 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria fail");
        ExitCode::FAILURE
    }
}
