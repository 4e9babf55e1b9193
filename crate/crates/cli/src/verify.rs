use pqc_core::coloring::{color_partition, validate_coloring};
use pqc_core::edge::all_edges;
use pqc_core::entropy::joint_distribution;
use pqc_core::graph::{
    cycle_census, distance, induced_cycle_vector, is_maximum_matching, is_near_perfect_matching,
    is_perfect_matching, matching_size,
};
use pqc_core::search::{count_distinct_paths, count_graph_classes};
use pqc_core::{
    exhaustive_search, mu, run, BoundParams, CycleMode, EdgeSet, EntropyEngine, ExhaustiveOptions,
    FieldSpec, Graph, Method, MonomialOrder, Result, SearchConfig,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Entropy,
    Graph,
    Coloring,
    Remarks,
    Paths,
}

pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

fn check(name: &str, ok: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        ok,
        detail: detail.into(),
    }
}

pub fn run_suite(suite: Suite, f: usize, field: FieldSpec, seed: u64) -> Result<Vec<Check>> {
    match suite {
        Suite::Entropy => entropy(f, field, seed),
        Suite::Graph => graph(f, seed),
        Suite::Coloring => coloring(f),
        Suite::Remarks => remarks(f, field),
        Suite::Paths => paths(f),
    }
}

fn entropy(f: usize, field: FieldSpec, seed: u64) -> Result<Vec<Check>> {
    let engine = EntropyEngine::new(f, field)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let mut edges = all_edges(f);
        edges.shuffle(&mut rng);
        edges.truncate(rng.gen_range(1..=mu(f)));
        let chain: f64 = engine.conditional_profile(&edges)?.iter().sum();
        let joint = joint_distribution(&edges, f, field)?.entropy();
        worst = worst.max((chain - joint).abs());
    }
    let balanced = all_edges(f)
        .into_iter()
        .map(|e| engine.joint_entropy(EdgeSet::from_edges(f, [e]).expect("valid edge")))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .all(|&h| h == engine.h_min());
    let empty = engine.joint_entropy(EdgeSet::empty(f))?;
    Ok(vec![
        check(
            "chain rule",
            worst <= 1e-12,
            format!("100 random prefixes, max |diff| {worst:.1e}"),
        ),
        check(
            "balancedness",
            balanced,
            format!("all singletons equal H_min = {:.13}", engine.h_min()),
        ),
        check("empty set", empty == 0.0, format!("H = {empty}")),
    ])
}

fn graph(f: usize, seed: u64) -> Result<Vec<Check>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut consistent = true;
    let mut symmetric = true;
    for _ in 0..50 {
        let g = Graph::from_edges(f, all_edges(f).into_iter().filter(|_| rng.gen_bool(0.5)))?;
        let base = cycle_census(&g);
        for x in g.non_edges() {
            let full = induced_cycle_vector(&g, x, CycleMode::FullGraph)?;
            let through = induced_cycle_vector(&g, x, CycleMode::ThroughEdge)?;
            consistent &= full == &base + &through;
        }
        for u in 1..=f {
            for v in 1..=f {
                symmetric &= distance(&g, u, v)? == distance(&g, v, u)?;
            }
        }
    }
    Ok(vec![
        check(
            "census consistency",
            consistent,
            "full-graph = base census + through-edge, 50 random graphs",
        ),
        check(
            "distance symmetry",
            symmetric,
            "d(u,v) = d(v,u), 50 random graphs",
        ),
    ])
}

fn coloring(f: usize) -> Result<Vec<Check>> {
    let p = color_partition(f)?;
    let matchings = p.sets().iter().all(|s| {
        let set = EdgeSet::from_edges(f, s.iter().copied()).expect("valid edges");
        if f % 2 == 0 {
            is_perfect_matching(set)
        } else {
            is_near_perfect_matching(set)
        }
    });
    Ok(vec![
        check(
            "proper coloring",
            validate_coloring(&p, f),
            format!("{} color sets cover K_{f}", p.color_count()),
        ),
        check(
            "color sets are matchings",
            matchings,
            format!("all {} color sets valid matchings", p.color_count()),
        ),
    ])
}

fn remarks(f: usize, field: FieldSpec) -> Result<Vec<Check>> {
    let opts = ExhaustiveOptions {
        collect_argmin: true,
        ..ExhaustiveOptions::default()
    };
    let mut sets = Vec::new();
    for n in [2, 3] {
        let params = BoundParams::new(n, f, field)?;
        sets.push(
            exhaustive_search(&params, &params.engine()?, &opts)?
                .argmin
                .unwrap_or_default(),
        );
    }
    let mut out = vec![check(
        "argmin independent of n",
        sets[0] == sets[1],
        format!(
            "{} optimal orders for n=2, {} for n=3",
            sets[0].len(),
            sets[1].len()
        ),
    )];
    if f > 3 {
        let eta = matching_size(f);
        let head = |o: &MonomialOrder| {
            is_maximum_matching(
                EdgeSet::from_edges(f, o.edges()[..eta].iter().copied()).expect("valid"),
            )
        };
        out.push(check(
            "optimal orders open with a matching",
            sets[0].iter().all(head),
            format!("first {eta} edges of every optimal order"),
        ));
        let params = BoundParams::new(2, f, field)?;
        let engine = params.engine()?;
        let mut methods_ok = true;
        for method in [Method::Ec, Method::EnhancedEc, Method::Ldf] {
            methods_ok &= head(&run(&SearchConfig::new(method, params), &engine)?.best.order);
        }
        out.push(check(
            "EC/E-EC/LDF open with a matching",
            methods_ok,
            format!("first {eta} edges"),
        ));
    }
    Ok(out)
}

/// Published reference values of the path count.
const KNOWN_PATHS: [(usize, u64); 3] = [(2, 1), (3, 1), (5, 275)];

fn paths(f: usize) -> Result<Vec<Check>> {
    let delta = count_distinct_paths(f)?;
    let lambda = count_graph_classes(f)?;
    let mut out = Vec::new();
    match KNOWN_PATHS.iter().find(|(g, _)| *g == f) {
        Some(&(_, want)) => out.push(check(
            "path count",
            delta == want,
            format!("Delta_{f} = {delta}, expected {want}"),
        )),
        None => out.push(check(
            "path count",
            true,
            format!("Delta_{f} = {delta} (no reference value)"),
        )),
    }
    let classes = [(2, 2), (3, 4), (4, 11), (5, 34)];
    let want = classes.iter().find(|(g, _)| *g == f).map(|c| c.1);
    out.push(check(
        "graph classes",
        want == Some(lambda),
        format!("lambda_{f} = {lambda}"),
    ));
    Ok(out)
}
