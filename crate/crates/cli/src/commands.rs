use std::path::Path;
use std::time::Duration;

use langcard::automata::format::parse_traces_extending;
use langcard::automata::{align_alphabet, minimize, parse_dfa, parse_traces, write_dfa, write_traces, Alphabet, Dfa};
use langcard::baselines::{
    mbt_assessment, sigma_sampling_assessment, trace_similarity, trace_similarity_conditioned, Metric,
    RandomWalkConfig, SigmaSamplingConfig, WMethodConfig,
};
use langcard::counting::{approx_star_height, coefficients, compute_ogf_with_budget, count_dp, WorkBudget};
use langcard::inference::{generate_training_set, k_tails, pta_state_count, InferenceConfig, TrainingSet};
use langcard::metrics::{
    assess as assess_counts, bounded_jaccard, confusion_ogfs, parse_metric_csv, svg_chart, ConfusionCounts,
    Measure, MetricRow, MetricTable, OutputMode,
};
use langcard::{BigInt, Error};
use serde_json::json;

use crate::output::{read_input, CliResult, Failure, Run};
use crate::{
    AssessArgs, BaselineArgs, CountArgs, Format, GenTracesArgs, InferArgs, LengthRange, Method, Mode, Oracle,
    ReportArgs, WalkArgs,
};

pub const BUDGET_ENV: &str = "LANGCARD_WORK_BUDGET";

/// First line of generated trace files; lets `infer` recover the symbol order.
const ALPHABET_HEADER: &str = "# alphabet:";

fn load_dfa(path: &Path, run: &mut Run) -> CliResult<Dfa> {
    run.input(path);
    let text = read_input(path)?;
    parse_dfa(&text).map_err(|e| Failure::from(e).context(path.display()))
}

fn work_budget(run: &mut Run) -> CliResult<WorkBudget> {
    let budget = match std::env::var(BUDGET_ENV) {
        Ok(spec) => WorkBudget::parse(&spec).map_err(|e| Failure::from(e).context(BUDGET_ENV))?,
        Err(_) => WorkBudget::default(),
    };
    run.config(
        "work_budget",
        json!({
            "max_degree": budget.max_degree,
            "seconds": budget.time_limit.map(|t| t.as_secs()),
        }),
    );
    Ok(budget)
}

fn output_mode(m: Mode) -> OutputMode {
    match m {
        Mode::Single => OutputMode::Single,
        Mode::Cumulative => OutputMode::Cumulative,
        Mode::Both => OutputMode::Both,
    }
}

/// The CSV, or the chart drawn from exactly that CSV text.
fn render(csv: String, format: Format, title: &str) -> CliResult<String> {
    match format {
        Format::Csv => Ok(csv),
        Format::Svg => Ok(svg_chart(title, &parse_metric_csv(&csv)?)),
    }
}

fn format_name(f: Format) -> &'static str {
    match f {
        Format::Csv => "csv",
        Format::Svg => "svg",
    }
}

pub fn assess(a: &AssessArgs) -> CliResult<()> {
    let mut run = Run::new("assess");
    let r = load_dfa(&a.reference, &mut run)?;
    let h = load_dfa(&a.inferred, &mut run)?;
    let h = align_alphabet(&h, r.alphabet())?;
    let range = a.range.unwrap_or(LengthRange { lo: 0, hi: a.max_length });
    let budget = work_budget(&mut run)?;
    run.config("max_length", range.hi);
    run.config("range", [range.lo, range.hi]);
    run.config("mode", format!("{:?}", a.mode).to_lowercase());
    run.config("format", format_name(a.format));
    run.config("digits", a.digits);

    let ogfs = confusion_ogfs::<BigInt>(&r, &h, budget)?;
    let counts = ConfusionCounts::from_ogfs(&ogfs, range.hi, r.alphabet().len())?;
    let result = assess_counts(&counts);
    run.result("ogf_tp", ogfs.tp.to_string());
    run.result("ogf_fp", ogfs.fp.to_string());
    run.result("ogf_fn", ogfs.fn_.to_string());
    if a.jaccard {
        let j: Measure<BigInt> = bounded_jaccard(&r, &h, range.hi)?;
        run.result("bounded_jaccard", j.to_string());
    }
    let csv = result.table().restrict(range.lo, range.hi).to_csv(output_mode(a.mode), a.digits);
    let body = render(csv, a.format, "exact precision and recall")?;
    run.finish(a.out.out.as_deref(), &body)
}

pub fn count(a: &CountArgs) -> CliResult<()> {
    let mut run = Run::new("count");
    let d = load_dfa(&a.model, &mut run)?;
    run.config("max_length", a.max_length);
    let seq = match a.oracle {
        Oracle::Dp => {
            run.config("oracle", "dp");
            count_dp::<BigInt>(&d, a.max_length)
        }
        Oracle::Ogf => {
            run.config("oracle", "ogf");
            let budget = work_budget(&mut run)?;
            let f = compute_ogf_with_budget::<BigInt>(&d, budget)?;
            let text = f.to_string();
            // stdout carries the CSV when no output file is given
            if a.out.out.is_some() {
                println!("ogf: {text}");
            } else {
                eprintln!("ogf: {text}");
            }
            run.result("ogf", text);
            run.result("star_height", approx_star_height(&minimize(&d)));
            coefficients(&f, a.max_length)?
        }
    };
    run.finish(a.out.out.as_deref(), &seq.to_csv())
}

fn walk_config(w: &WalkArgs, default_traces: usize, default_coverage: u64, run: &mut Run) -> RandomWalkConfig {
    let base = RandomWalkConfig::default();
    let cfg = RandomWalkConfig {
        termination_probability: w.pa,
        target_trace_count: w.target_traces.unwrap_or(default_traces),
        min_transition_coverage: w.min_coverage.unwrap_or(default_coverage),
        time_limit: match w.time_limit {
            Some(0) => None,
            Some(s) => Some(Duration::from_secs(s)),
            None => base.time_limit,
        },
        seed: w.seed,
        exclude_error_transitions: !w.allow_error_transitions,
        ..base
    };
    run.config("pa", cfg.termination_probability);
    run.config("seed", cfg.seed);
    run.config("target_traces", cfg.target_trace_count);
    run.config("min_coverage", cfg.min_transition_coverage);
    run.config("time_limit_seconds", cfg.time_limit.map(|t| t.as_secs()));
    run.config("exclude_error_transitions", cfg.exclude_error_transitions);
    run.config("max_steps", cfg.max_steps);
    run.config("max_restarts", cfg.max_restarts);
    run.config("max_traces", cfg.max_traces);
    cfg
}

pub fn baseline(a: &BaselineArgs) -> CliResult<()> {
    let name = match a.method {
        Method::TraceSim => "trace-sim",
        Method::TraceSimConditioned => "trace-sim-conditioned",
        Method::Mbt => "mbt",
        Method::SigmaSample => "sigma-sample",
    };
    let mut run = Run::new("baseline");
    run.config("method", name);
    run.config("format", format_name(a.format));
    run.config("digits", a.digits);
    let r = load_dfa(&a.reference, &mut run)?;
    let h = load_dfa(&a.inferred, &mut run)?;
    let h = align_alphabet(&h, r.alphabet())?;
    let (table, mode) = match a.method {
        Method::TraceSim => {
            let cfg = walk_config(&a.walk, RandomWalkConfig::default().target_trace_count, 0, &mut run);
            let sim = trace_similarity(&r, &h, &cfg)?;
            run.result("precision_traces", sim.e_prec.len());
            run.result("recall_traces", sim.e_rec.len());
            run.result("precision", sim.precision.to_string());
            run.result("recall", sim.recall.to_string());
            (sim.table(), OutputMode::Cumulative)
        }
        Method::TraceSimConditioned => {
            let cfg = walk_config(&a.walk, RandomWalkConfig::default().target_trace_count, 0, &mut run);
            let sim = trace_similarity_conditioned(&r, &h, &cfg)?;
            run.result("precision_traces", sim.e_prec.len());
            run.result("recall_traces", sim.e_rec.len());
            let mut table = sim.table();
            if let Some(range) = a.range {
                run.config("range", [range.lo, range.hi]);
                table = table.restrict(range.lo, range.hi);
            }
            (table, OutputMode::Single)
        }
        Method::Mbt => {
            let m = a
                .m_bound
                .unwrap_or_else(|| minimize(&r).state_count().max(minimize(&h).state_count()));
            run.config("m_bound", m);
            let res = mbt_assessment(&r, &h, &WMethodConfig::new(m))?;
            run.result("test_set_size", res.test_set.len());
            run.result(
                "evaluation",
                json!({
                    "tp": res.evaluation.tp,
                    "fp": res.evaluation.fp,
                    "fn": res.evaluation.fn_,
                    "tn": res.evaluation.tn,
                }),
            );
            (res.table(), OutputMode::Cumulative)
        }
        Method::SigmaSample => (sigma_sample(&r, &h, a, &mut run)?, OutputMode::Single),
    };
    let csv = table.to_csv(mode, a.digits);
    let body = render(csv, a.format, name)?;
    run.finish(a.out.out.as_deref(), &body)
}

/// Uniform Σ^l sampling at every requested length, for both metrics. Lengths where the
/// conditioning model accepts nothing, or accepts so rarely that more than
/// `max_draws` draws are expected, are reported undefined.
fn sigma_sample(r: &Dfa, h: &Dfa, a: &BaselineArgs, run: &mut Run) -> CliResult<MetricTable<BigInt>> {
    let range = a.range.unwrap_or(LengthRange { lo: 0, hi: 20 });
    let base = SigmaSamplingConfig::default();
    let cfg = SigmaSamplingConfig {
        target_samples: a.walk.target_traces.map_or(base.target_samples, |t| t as u64),
        time_limit: match a.walk.time_limit {
            Some(0) => None,
            Some(s) => Some(Duration::from_secs(s)),
            None => base.time_limit,
        },
        seed: a.walk.seed,
    };
    run.config("range", [range.lo, range.hi]);
    run.config("seed", cfg.seed);
    run.config("target_samples", cfg.target_samples);
    run.config("time_limit_seconds", cfg.time_limit.map(|t| t.as_secs()));
    run.config("max_draws", a.max_draws);
    let k = BigInt::from(r.alphabet().len());
    let r_counts = count_dp::<BigInt>(r, range.hi);
    let h_counts = count_dp::<BigInt>(h, range.hi);
    let mut skipped = Vec::new();
    let mut generated = 0u64;
    let mut rows = Vec::new();
    for l in range.lo..=range.hi {
        let space = num_pow(&k, l);
        let mut estimate = |metric: Metric, accepted: &BigInt| -> CliResult<Measure<BigInt>> {
            let feasible = *accepted > BigInt::from(0)
                && BigInt::from(cfg.target_samples) * &space <= BigInt::from(a.max_draws) * accepted;
            if !feasible {
                skipped.push(json!({ "length": l, "metric": format!("{metric:?}").to_lowercase() }));
                return Ok(Measure::Undefined);
            }
            match sigma_sampling_assessment(r, h, l, metric, &cfg) {
                Ok(s) => {
                    generated += s.generated;
                    Ok(s.value)
                }
                Err(Error::EmptyLanguage) => Ok(Measure::Undefined),
                Err(e) => Err(e.into()),
            }
        };
        let p = estimate(Metric::Precision, h_counts.get(l))?;
        let q = estimate(Metric::Recall, r_counts.get(l))?;
        rows.push(MetricRow::single(l, p, q));
    }
    run.result("generated", generated);
    run.result("skipped", skipped);
    Ok(MetricTable { rows })
}

fn num_pow(base: &BigInt, exp: usize) -> BigInt {
    (0..exp).fold(BigInt::from(1), |acc, _| acc * base)
}

fn alphabet_header(text: &str) -> Option<CliResult<Alphabet>> {
    let first = text.lines().next()?;
    let names = first.strip_prefix(ALPHABET_HEADER)?;
    Some(Alphabet::new(names.split_whitespace()).map_err(Failure::from))
}

pub fn infer(a: &InferArgs) -> CliResult<()> {
    let mut run = Run::new("infer");
    run.config("k", a.k);
    run.input(&a.traces);
    let text = read_input(&a.traces)?;
    let in_file = |e: Error| Failure::from(e).context(a.traces.display());
    let (alphabet, traces) = if let Some(path) = &a.alphabet_from {
        let model = load_dfa(path, &mut run)?;
        let ab = model.alphabet().clone();
        let traces = parse_traces(&text, &ab).map_err(in_file)?;
        (ab, traces)
    } else if let Some(ab) = alphabet_header(&text) {
        let ab = ab?;
        let traces = parse_traces(&text, &ab).map_err(in_file)?;
        (ab, traces)
    } else {
        let mut ab = Alphabet::new(Vec::<String>::new())?;
        let traces = parse_traces_extending(&text, &mut ab).map_err(in_file)?;
        (ab, traces)
    };
    let ts = TrainingSet::new(alphabet, traces)?;
    let model = k_tails(&ts, &InferenceConfig { k: a.k })?;
    run.result("training_traces", ts.len());
    run.result("pta_states", pta_state_count(&ts));
    run.result("states", model.state_count());
    run.finish(a.out.out.as_deref(), &write_dfa(&model))
}

pub fn gen_traces(a: &GenTracesArgs) -> CliResult<()> {
    let mut run = Run::new("gen-traces");
    let d = load_dfa(&a.model, &mut run)?;
    let cfg = walk_config(&a.walk, 100, 0, &mut run);
    let ts = generate_training_set(&d, &cfg)?;
    run.result("traces", ts.len());
    run.result("max_length", ts.max_length());
    let mut body = format!("{ALPHABET_HEADER} {}\n", d.alphabet());
    body.push_str(&write_traces(ts.traces(), ts.alphabet()));
    run.finish(a.out.out.as_deref(), &body)
}

pub fn report(a: &ReportArgs) -> CliResult<()> {
    let mut run = Run::new("report");
    run.config("title", &a.title);
    run.config("column", &a.column);
    let mut series = Vec::new();
    for path in &a.inputs {
        run.input(path);
        let text = read_input(path)?;
        let parsed = parse_metric_csv(&text).map_err(|e| Failure::from(e).context(path.display()))?;
        let stem = path.file_stem().map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into());
        let before = series.len();
        for mut s in parsed {
            if a.column.as_deref().is_some_and(|c| c != s.label) {
                continue;
            }
            s.label = format!("{stem}:{}", s.label);
            series.push(s);
        }
        if series.len() == before {
            return Err(Failure::usage(format!("{}: no matching column", path.display())));
        }
    }
    run.result("series", series.len());
    run.finish(a.out.out.as_deref(), &svg_chart(&a.title, &series))
}
