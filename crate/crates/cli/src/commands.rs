//! Subcommand handlers; each returns a report or a failure with its exit status.

use braidkit::braidrep::{braid_alphabet, braid_is_trivial};
use braidkit::garside::coherence::{check_coherence_left_with, check_coherence_right_with};
use braidkit::garside::{
    compare_with_ball, enumerate_ball, verify_garside, CoherenceReport, ComplementedMonoid, GarsideCertificate,
    GarsideStructure, GreedyForm, ReversalOutcome, TripleStatus,
};
use braidkit::linkinv::{fingerprint_with, gamma_presentation, run_markov_harness, MarkovConfig};
use braidkit::semidirect::{verify_semidirect, SemidirectInstance};
use braidkit::wada::{
    abelianized_action, apply_braid as wada_apply_braid, check_equivalence_witness_23, check_inversion_witness,
    check_y_table, cyclic_relator_fingerprint, fixed_subgroup_checks, free_alphabet, is_permutation_matrix,
};
use braidkit::{Alphabet, ArtinRepresentation, BraidWord, IntegerMatrix, PositiveWord, Side, WadaKind, WadaRep};

use crate::input::{delta_of, parse_base, parse_base_word, read_presentation, CliResult, Failure};
use crate::report::{Report, Status};
use crate::{BraidCmd, GarsideCmd, LinkinvCmd, RunConfig, SemidirectArgs, SemidirectCmd, SideArg, SidesArg, WadaCmd, WadaType};

fn load_monoid(config: &RunConfig, file: &std::path::Path) -> CliResult<(braidkit::garside::PresentationFile, ComplementedMonoid)> {
    let f = read_presentation(file)?;
    let m = f.monoid()?.with_cap(config.cap);
    Ok((f, m))
}

fn greedy_text(a: &Alphabet, g: &GreedyForm) -> String {
    if g.is_empty() {
        return "ε".into();
    }
    g.factors.iter().map(|f| format!("[{}]", a.format_positive(f))).collect::<Vec<_>>().join(" ")
}

fn coherence_rows(report: &mut Report, a: &Alphabet, c: &CoherenceReport) {
    let side = c.side.label();
    for t in &c.triples {
        let (x, y, z) = t.triple;
        let status = match &t.status {
            TripleStatus::Pass => "pass".to_string(),
            TripleStatus::PassByEnumeration => "pass (enumeration)".to_string(),
            TripleStatus::Vacuous => "vacuous".to_string(),
            TripleStatus::Diverged => "diverged".to_string(),
            TripleStatus::Fail { lhs, rhs } => {
                format!("FAIL {} vs {}", a.display_positive(lhs), a.display_positive(rhs))
            }
        };
        report.row(format!("{side} ({}, {}, {}): {status}", a.name(x), a.name(y), a.name(z)));
    }
    report.field(format!("{side}.triples"), c.triples.len());
    report.field(format!("{side}.failures"), c.failures().count());
    if c.diverged() {
        report.status = report.status.and(Status::Exhausted);
    } else if !c.passed() {
        report.fail();
    }
}

fn certificate_rows(report: &mut Report, a: &Alphabet, cert: &GarsideCertificate) {
    report.field("delta", a.display_positive(&cert.delta));
    report.field("atoms", cert.atoms.iter().map(|&g| a.name(g)).collect::<Vec<_>>().join(" "));
    report.field("left_divisors", cert.left_divisors.len());
    report.field("right_divisors", cert.right_divisors.len());
    if let Some(tau) = cert.tau_permutation() {
        let parts: Vec<String> = cert.atoms.iter().map(|&g| format!("{}->{}", a.name(g), a.name(tau[g]))).collect();
        report.field("tau", parts.join(" "));
    }
    for c in &cert.checks {
        let verdict = if c.passed { "pass" } else { "failed" };
        report.row(format!("({}) {verdict}: {}", c.condition.label(), c.detail));
    }
    if cert.left_coherence.diverged() || cert.right_coherence.diverged() {
        report.status = report.status.and(Status::Exhausted);
    } else if !cert.passed() {
        report.fail();
    }
}

fn garside_structure(m: ComplementedMonoid, delta: PositiveWord) -> CliResult<GarsideStructure> {
    GarsideStructure::new(m, delta).map_err(Failure::from)
}

pub fn garside(config: &RunConfig, cmd: &GarsideCmd) -> CliResult<Report> {
    let mut report = Report::new();
    match cmd {
        GarsideCmd::Reverse { file, word, side } => {
            let (_, m) = load_monoid(config, &file.file)?;
            let a = m.alphabet().clone();
            let w = a.parse_signed(word)?;
            let side = match side {
                SideArg::Left => Side::Left,
                SideArg::Right => Side::Right,
            };
            report.field("side", side.label()).field("word", a.display_signed(&w));
            match m.reverse(&w, side) {
                ReversalOutcome::Converged { u, v, steps } => {
                    let result = match side {
                        Side::Left => u.to_signed().concat(&v.inverse()),
                        Side::Right => u.inverse().concat(&v.to_signed()),
                    };
                    report.field("outcome", "converged");
                    report.field("u", a.display_positive(&u)).field("v", a.display_positive(&v));
                    report.field("result", a.display_signed(&result)).field("steps", steps);
                }
                ReversalOutcome::Blocked { x, y, steps } => {
                    report.field("outcome", "blocked");
                    report.field("pattern", format!("{} {}", a.name(x), a.name(y))).field("steps", steps);
                }
                ReversalOutcome::Diverged { cap } => {
                    report.field("outcome", "diverged").field("cap", cap);
                    report.status = Status::Exhausted;
                }
            }
        }
        GarsideCmd::Coherence { file, side } => {
            let (_, m) = load_monoid(config, &file.file)?;
            let a = m.alphabet().clone();
            if matches!(side, SidesArg::Left | SidesArg::Both) {
                coherence_rows(&mut report, &a, &check_coherence_left_with(m.left_table(), config.cap, m.class_limit()));
            }
            if matches!(side, SidesArg::Right | SidesArg::Both) {
                coherence_rows(&mut report, &a, &check_coherence_right_with(m.right_table(), config.cap, m.class_limit()));
            }
        }
        GarsideCmd::Verify { file, delta } => {
            let (f, m) = load_monoid(config, &file.file)?;
            let d = delta_of(&f, delta.as_deref())?;
            let cert = verify_garside(&m, &d)?;
            certificate_rows(&mut report, m.alphabet(), &cert);
        }
        GarsideCmd::Nf { file, delta, word } => {
            let (f, m) = load_monoid(config, &file.file)?;
            let d = delta_of(&f, delta.as_deref())?;
            let s = garside_structure(m, d)?;
            let a = s.alphabet().clone();
            let w = a.parse_signed(word)?;
            match w.as_positive() {
                Some(p) => {
                    let g = s.greedy_normal_form(&p)?;
                    report.field("kind", "monoid");
                    report.field("factors", greedy_text(&a, &g));
                    report.field("normal_form", a.display_positive(&g.word()));
                }
                None => {
                    let fr = s.group_normal_form(&w)?;
                    report.field("kind", "fraction");
                    report.field("denominator", greedy_text(&a, &fr.denominator));
                    report.field("numerator", greedy_text(&a, &fr.numerator));
                    report.field("normal_form", a.display_signed(&fr.to_signed()));
                }
            }
        }
        GarsideCmd::Wp { file, delta, word, other } => {
            let (f, m) = load_monoid(config, &file.file)?;
            let d = delta_of(&f, delta.as_deref())?;
            let s = garside_structure(m, d)?;
            let a = s.alphabet().clone();
            let (u, v) = (a.parse_signed(word)?, a.parse_signed(other)?);
            report.field("equal", s.group_equal(&u, &v)?);
        }
        GarsideCmd::Ball { file, limit } => {
            let (_, m) = load_monoid(config, &file.file)?;
            let ball = enumerate_ball(m.presentation(), config.oracle_norm, *limit)?;
            let r = compare_with_ball(&m, &ball)?;
            report.field("norm", config.oracle_norm).field("elements", r.elements).field("pairs", r.pairs);
            report.field("join_left.mismatches", r.join_left.len());
            report.field("meet_left.mismatches", r.meet_left.len());
            report.field("join_right.mismatches", r.join_right.len());
            report.field("meet_right.mismatches", r.meet_right.len());
            report.field("meet.unavailable", r.meet_unavailable);
            report.check("left_cancellative", r.left_cancellative);
            report.check("right_cancellative", r.right_cancellative);
            report.check("oracle", r.passed());
        }
    }
    Ok(report)
}

fn representation(base: &str, h: &str, n: usize) -> CliResult<ArtinRepresentation> {
    let base = parse_base(base)?;
    let h = parse_base_word(base.as_ref(), h)?;
    Ok(ArtinRepresentation::from_word(base, &h, n)?)
}

pub fn braid(_config: &RunConfig, cmd: &BraidCmd) -> CliResult<Report> {
    let mut report = Report::new();
    match cmd {
        BraidCmd::Apply { rep, element } => {
            let r = representation(&rep.base, &rep.h, rep.n)?;
            let beta = BraidWord::parse(rep.n, &rep.braid)?;
            let g = r.group();
            report.field("base", r.base().label()).field("braid", &beta);
            match element {
                Some(e) => {
                    let x = g.parse_element(e)?;
                    report.field("image", g.format_element(&r.apply_braid(&beta, &x)?));
                }
                None => {
                    for (x, img) in g.generators()?.iter().zip(r.images(&beta)?) {
                        report.row(format!("{} -> {}", g.format_element(x), g.format_element(&img)));
                    }
                }
            }
        }
        BraidCmd::Trivial { n, braid } => {
            let beta = BraidWord::parse(*n, braid)?;
            report.field("braid", &beta).field("trivial", braid_is_trivial(&beta)?);
        }
    }
    Ok(report)
}

pub fn linkinv(config: &RunConfig, cmd: &LinkinvCmd) -> CliResult<Report> {
    let mut report = Report::new();
    match cmd {
        LinkinvCmd::Fingerprint { rep, presentation } => {
            let r = representation(&rep.base, &rep.h, rep.n)?;
            let beta = BraidWord::parse(rep.n, &rep.braid)?;
            if *presentation {
                report.field("presentation", gamma_presentation(&r, &beta)?.display());
            }
            report.row(fingerprint_with(&r, &beta)?.to_string());
        }
        LinkinvCmd::MarkovTest { cases } => {
            let harness = MarkovConfig { cases: *cases, seed: config.seed, jobs: config.jobs, ..MarkovConfig::default() };
            let result = run_markov_harness(&harness)?;
            for case in &result.cases {
                report.row(case.to_string());
            }
            report.field("cases", result.cases.len());
            report.field("failures", result.failures());
            report.check("markov", result.passed());
        }
    }
    Ok(report)
}

fn instance(args: &SemidirectArgs) -> CliResult<SemidirectInstance> {
    let base = parse_base(&args.base)?;
    let d = parse_base_word(base.as_ref(), &args.d)?;
    Ok(SemidirectInstance::from_group(base.as_ref(), &d, args.n)?)
}

pub fn semidirect(_config: &RunConfig, cmd: &SemidirectCmd) -> CliResult<Report> {
    let mut report = Report::new();
    match cmd {
        SemidirectCmd::Build { args } => {
            let inst = instance(args)?;
            let a = inst.alphabet().clone();
            let base = inst.base().alphabet().clone();
            report.field("generators", a.names().join(" "));
            for (l, r) in inst.presentation().relations() {
                report.row(format!("relation: {} = {}", a.format_positive(l), a.format_positive(r)));
            }
            let tau: Vec<String> =
                inst.tau().iter().enumerate().map(|(x, &y)| format!("{}->{}", base.name(x), base.name(y))).collect();
            report.field("tau", tau.join(" "));
            report.field("U", a.display_positive(&inst.u_word()));
            report.field("delta", a.display_positive(inst.delta()));
            for (name, table) in [("f", inst.monoid().left_table()), ("g", inst.monoid().right_table())] {
                for x in 0..a.len() {
                    for y in 0..a.len() {
                        if let (true, Some(w)) = (x != y, table.get(x, y)) {
                            report.row(format!("{name}({}, {}) = {}", a.name(x), a.name(y), a.display_positive(w)));
                        }
                    }
                }
            }
        }
        SemidirectCmd::Verify { args } => {
            let inst = instance(args)?;
            let r = verify_semidirect(&inst)?;
            certificate_rows(&mut report, inst.alphabet(), &r.certificate);
            for c in &r.checks {
                report.check(&c.name, c.passed);
            }
        }
    }
    Ok(report)
}

fn first_column_grows(n: usize) -> CliResult<bool> {
    let rep = WadaRep::new(WadaKind::Type2, n)?;
    for t in 0..=50i64 {
        let m = abelianized_action(&rep, &BraidWord::from_indices(n, &vec![1; t as usize])?)?;
        if *m.get(0, 0) != (t + 1).into() || *m.get(1, 0) != (-t).into() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn type1_permutations(h: i64, n: usize) -> CliResult<bool> {
    let rep = WadaRep::new(WadaKind::Type1(h), n)?;
    for k in 1..n {
        for sign in [1i64, -1] {
            if !is_permutation_matrix(&abelianized_action(&rep, &BraidWord::from_indices(n, &[sign * k as i64])?)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn distinct_fingerprints(n: usize) -> CliResult<bool> {
    let mut seen = Vec::new();
    for k in 1..=6i64 {
        let f = cyclic_relator_fingerprint(k, n)?;
        let expect_torsion = if k == 1 { 0 } else { 1 };
        if f.rank != n - 1 || f.torsion.len() != expect_torsion || seen.contains(&f) {
            return Ok(false);
        }
        seen.push(f);
    }
    Ok(true)
}

fn wada_kind(kind: WadaType, h: i64) -> WadaKind {
    match kind {
        WadaType::One => WadaKind::Type1(h),
        WadaType::Two => WadaKind::Type2,
        WadaType::Three => WadaKind::Type3,
    }
}

fn matrix_rows(report: &mut Report, m: &IntegerMatrix) {
    for i in 0..m.rows() {
        let cells: Vec<String> = m.row(i).iter().map(|v| format!("{v:>4}")).collect();
        report.row(format!("[{} ]", cells.join("")));
    }
}

pub fn wada(config: &RunConfig, cmd: &WadaCmd) -> CliResult<Report> {
    let mut report = Report::new();
    match cmd {
        WadaCmd::Check { all, n, h, samples } => {
            if *n < 2 {
                return Err(Failure::input("--n must be at least 2"));
            }
            let ranks: Vec<usize> = if *all { (2..=*n).collect() } else { vec![*n] };
            for &r in &ranks {
                report.check(format!("n={r} inversion(h={h})"), check_inversion_witness(*h, r)?);
                report.check(format!("n={r} y-table"), check_y_table(r)?);
                report.check(format!("n={r} equivalence(2,3)"), check_equivalence_witness_23(r)?);
                let fixed = fixed_subgroup_checks(*h, r, *samples, config.seed)?;
                report.check(format!("n={r} fixed-subgroups(h={h})"), fixed.passed());
                report.check(format!("n={r} type2-unbounded"), first_column_grows(r)?);
                report.check(format!("n={r} type1-permutations(h={h})"), type1_permutations(*h, r)?);
                report.check(format!("n={r} relator-fingerprints"), distinct_fingerprints(r)?);
            }
        }
        WadaCmd::Act { kind, h, n, braid, abelianized } => {
            let n = match n {
                Some(n) => *n,
                None => {
                    let wide = braid_alphabet(64)?.parse_signed(braid)?;
                    wide.max_index().map_or(2, |m| m + 2)
                }
            };
            let rep = WadaRep::new(wada_kind(*kind, *h), n)?;
            let beta = BraidWord::parse(n, braid)?;
            report.field("representation", rep.kind()).field("n", n).field("braid", &beta);
            if *abelianized {
                matrix_rows(&mut report, &abelianized_action(&rep, &beta)?);
            } else {
                let a = free_alphabet(n)?;
                for i in 0..n {
                    let x = a.parse_signed(a.name(i))?;
                    report.row(format!("{} -> {}", a.name(i), a.display_signed(&wada_apply_braid(&rep, &beta, &x)?)));
                }
            }
        }
    }
    Ok(report)
}
