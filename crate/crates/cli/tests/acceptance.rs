//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. Every count and tolerance is fixed below.

use std::time::Instant;

use abfactor::avoidance::{check_edge_avoiding, rho, CheckOptions};
use abfactor::factor::{
    brute_force_factor, check_ab_factor, check_star_factor, degree_ceiling_classes, delta,
    delta_mask, delta_saturated, find_ab_factor, find_katerinis_pair, find_star_factor, low_set,
    search_ab_factor, FactorCertificate,
};
use abfactor::graph::{
    build_extremal, delete, generate_with, DeletionSpec, Edge, Graph, VertexSet,
};
use abfactor::toughness::{isolated_toughness, isolated_toughness_bruteforce, Threshold};
use abfactor::{Fraction, Limits};
use abfactor_cli::campaign::{self, Outcome};
use abfactor_cli::config::CampaignConfig;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random 7-8 vertex graphs added to the exhaustive ≤ 7 corpus.
const TRIANGLE_RANDOM: usize = 2000;
/// Random 7-12 vertex graphs for the toughness comparison.
const TOUGHNESS_RANDOM: usize = 1000;
/// Minimum premise-satisfying campaign instances.
const CAMPAIGN_MIN: usize = 1000;
/// Random samples for the saturated low-set identity.
const IDENTITY_SAMPLES: usize = 10_000;
const SEED: u64 = 0x005e_edab;

/// Labeled graphs on `n` vertices, one per subset of the vertex pairs.
fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let es = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, es).unwrap()
    })
}

fn upto(max_n: usize) -> impl Iterator<Item = Graph> {
    (1..=max_n).flat_map(all_graphs)
}

fn random_graphs(count: usize, lo: usize, hi: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(lo..=hi);
            let p = Fraction::new(rng.random_range(1..=9), 10);
            generate_with(n, p, &mut rng).unwrap()
        })
        .collect()
}

struct Outcomes {
    failed: usize,
}

impl Outcomes {
    fn report(&mut self, id: u32, name: &str, pass: bool, detail: String, start: Instant) {
        let tag = if pass { "PASS" } else { "FAIL" };
        println!(
            "{tag} criterion {id} {name}: {detail} ({:.1}s)",
            start.elapsed().as_secs_f64()
        );
        if !pass {
            self.failed += 1;
        }
    }
}

fn triangle(o: &mut Outcomes, limits: &Limits) {
    let start = Instant::now();
    // Eight vertices carry up to 28 edges.
    let limits = &Limits {
        brute_max_edges: 28,
        ..*limits
    };
    let corpus = upto(7).chain(random_graphs(TRIANGLE_RANDOM, 7, 8, SEED));
    let (mut graphs, mut disagreements, mut bad_certs) = (0usize, 0usize, 0usize);
    for g in corpus {
        graphs += 1;
        for (a, b) in [(1, 2), (1, 3), (2, 3)] {
            let crit = check_ab_factor(&g, a, b, limits).unwrap();
            let found = search_ab_factor(&g, a, b, limits.search_budget).unwrap();
            let brute = brute_force_factor(&g, a, b, limits).unwrap();
            if crit.exists() != brute || found.is_some() != brute {
                disagreements += 1;
            }
            let found = found.map_or(FactorCertificate::Absent, FactorCertificate::Factor);
            if !crit.verify(&g, a, b).unwrap() || !found.verify(&g, a, b).unwrap() {
                bad_certs += 1;
            }
        }
    }
    o.report(
        1,
        "factor oracle triangle",
        graphs > 0 && disagreements == 0 && bad_certs == 0,
        format!("{graphs} graphs (every labeled graph on <= 7 vertices + {TRIANGLE_RANDOM} random on 7-8) x 3 (a,b): {disagreements} disagreements, {bad_certs} bad certificates"),
        start,
    );
}

fn toughness(o: &mut Outcomes, limits: &Limits) -> Vec<Graph> {
    let start = Instant::now();
    let random = random_graphs(TOUGHNESS_RANDOM, 7, 12, SEED + 1);
    let (mut graphs, mut mismatches) = (0usize, 0usize);
    for g in upto(6).chain(random.iter().cloned()) {
        graphs += 1;
        let fast = isolated_toughness(&g).unwrap();
        let brute = isolated_toughness_bruteforce(&g, limits).unwrap();
        if fast.value != brute.value || !fast.verify(&g).unwrap() || !brute.verify(&g).unwrap() {
            mismatches += 1;
        }
    }
    o.report(
        2,
        "isolated toughness equivalence",
        mismatches == 0,
        format!("{graphs} graphs: {mismatches} mismatches"),
        start,
    );
    random
}

fn sharpness(o: &mut Outcomes, limits: &Limits) {
    let start = Instant::now();
    let mut problems = Vec::new();
    let mut cases = 0;
    for (a, b, n) in [(2, 3, 1), (2, 4, 2), (3, 4, 1)] {
        let threshold = Threshold::VertexDeletion { a, b, n }.value().unwrap();
        for m in 1..=3usize {
            cases += 1;
            let label = format!("({m},{a},{b},{n})");
            let w = build_extremal(m, a, b, n).unwrap();
            let formula = Fraction::new(
                ((m * b + 1) * (a - 1 + n) + m * (a - 1)) as i64,
                (m * b + 1) as i64,
            );
            if w.cut_ratio().unwrap() != formula || formula >= threshold {
                problems.push(format!("{label} ratio {formula} vs {threshold}"));
            }
            let (_, verdict) = campaign::extremal_verdict(&w.params, limits).unwrap();
            let Some(ce) = verdict.counterexample.as_ref() else {
                problems.push(format!("{label} no counterexample"));
                continue;
            };
            let v0 = w.avoided_vertices().unwrap();
            let FactorCertificate::Violation(viol) = &ce.certificate else {
                problems.push(format!("{label} certificate is not a violating set"));
                continue;
            };
            if ce.deletion != Some(DeletionSpec::Vertices(v0.clone())) || viol.s != w.clique_small {
                problems.push(format!("{label} witness {:?}", viol.s));
            }
            if !verdict.verify_counterexample(&w.graph, limits).unwrap() {
                problems.push(format!("{label} certificate does not re-verify"));
            }
            // a|T| - d(T) on H - V0 at S = small clique.
            let d = delete(&w.graph, &DeletionSpec::Vertices(v0)).unwrap();
            let s = d.lower_set(&w.clique_small).unwrap();
            let t = low_set(&d.graph, &s, a).unwrap();
            let removed = d.graph.indicator(&s).unwrap();
            let d_t: usize = t.iter().map(|x| d.graph.degree_avoiding(x, &removed)).sum();
            let lhs = (a * t.len() - d_t) as i64;
            let (want, bs) = (((m * b + 1) * (a - 1)) as i64, (b * s.len()) as i64);
            if lhs != want || bs != (m * b * (a - 1)) as i64 || lhs <= bs {
                problems.push(format!("{label} a|T|-d(T) = {lhs}, b|S| = {bs}"));
            }
            if delta(&d.graph, &s, a, b).unwrap() != bs - lhs {
                problems.push(format!("{label} deficiency mismatch"));
            }
        }
    }
    o.report(
        3,
        "extremal sharpness",
        problems.is_empty(),
        if problems.is_empty() {
            format!("{cases} parameter sets, ratio below threshold and witness S = small clique in each")
        } else {
            problems.join("; ")
        },
        start,
    );
}

const CAMPAIGN: &str = "\
theorems = vertex-deletion, edge-deletion-star, matching-deletion, edge-from-pairs, inner-bound
n_range = 7..12
p_list = 1/2, 7/10, 9/10
seed_list = 11
ab = 1:2, 2:3
n = 1, 2
m = 2, 3, 4
k = 2, b
quota = 80
max_attempts = 600
cap_n = 12
cap_deletions = 3000
";

fn campaigns(o: &mut Outcomes, limits: &Limits) {
    let start = Instant::now();
    let cfg: CampaignConfig = CAMPAIGN.parse().unwrap();
    let report = campaign::run(&cfg);
    let t = &report.totals;
    let satisfied = report
        .instances
        .iter()
        .filter(|i| {
            i.verdict
                .as_ref()
                .is_some_and(|v| v.premises_hold == Some(true))
        })
        .count();
    let mut unverifiable = 0;
    for inst in &report.instances {
        let g = abfactor::graph::parse_graph6(&inst.graph6).unwrap();
        if let Some(v) = &inst.verdict {
            if !v.verify_counterexample(&g, limits).unwrap() {
                unverifiable += 1;
            }
        }
    }
    let by_theorem: Vec<String> = cfg
        .theorems
        .iter()
        .map(|k| {
            let c = report
                .instances
                .iter()
                .filter(|i| i.theorem == *k && i.outcome == Outcome::Verified)
                .count();
            format!("{k} {c}")
        })
        .collect();
    let pass = satisfied >= CAMPAIGN_MIN
        && t.counterexample == 0
        && t.capped == 0
        && t.error == 0
        && t.undetermined == 0
        && t.is_consistent()
        && unverifiable == 0;
    o.report(
        4,
        "deletion campaigns",
        pass,
        format!(
            "{satisfied} premise-satisfying instances ({}), {} counterexamples, {} capped, {} errors; {} vacuous draws excluded",
            by_theorem.join(", "),
            t.counterexample,
            t.capped,
            t.error,
            t.rejected_vacuous
        ),
        start,
    );
}

fn isolated_after_edge_removal(o: &mut Outcomes, random: &[Graph]) {
    let start = Instant::now();
    let corpus = upto(7).chain(random_graphs(TRIANGLE_RANDOM, 7, 8, SEED));
    let (mut edges, mut violations) = (0usize, 0usize);
    for g in corpus.chain(random.iter().cloned()) {
        let base = g.isolated();
        for e in g.edges() {
            edges += 1;
            let after = g.without_edge(e).unwrap().isolated();
            if !(base <= after && after <= base + 2) {
                violations += 1;
            }
        }
    }
    let k2 = Graph::from_edges(2, [(0, 1)]).unwrap();
    let boundary = k2.without_edge(Edge::new(0, 1)).unwrap().isolated() == k2.isolated() + 2;
    o.report(
        5,
        "isolated count under edge removal",
        violations == 0 && boundary,
        format!(
            "{edges} edges: {violations} violations; two-vertex boundary case {}",
            if boundary { "attained" } else { "missed" }
        ),
        start,
    );
}

fn edge_avoidance(o: &mut Outcomes, limits: &Limits) {
    let start = Instant::now();
    let (mut cases, mut disagreements) = (0usize, 0usize);
    let opts = CheckOptions::with_limits(*limits);
    for g in upto(6).filter(|g| g.min_degree() >= 1) {
        for e in g.edges() {
            let h = g.without_edge(e).unwrap();
            for (a, b) in [(2, 3), (1, 2)] {
                cases += 1;
                let criterion = (0u64..1 << g.order()).all(|s| {
                    let r = rho(&g, e, &VertexSet::from_mask(s), a).unwrap();
                    delta_mask(&g, s, a, b) >= r.value
                });
                let found = find_ab_factor(&h, a, b, limits).unwrap().exists();
                let check = check_edge_avoiding(&g, e, a, b, &opts).unwrap().conclusion;
                if criterion != found || check != Some(found) {
                    disagreements += 1;
                }
            }
        }
    }
    o.report(
        6,
        "edge-avoiding factor criterion",
        cases > 0 && disagreements == 0,
        format!("{cases} (graph, edge, a, b) cases: {disagreements} disagreements"),
        start,
    );
}

fn independent_cover_pairs(o: &mut Outcomes, limits: &Limits) {
    let start = Instant::now();
    let (mut cases, mut failures) = (0usize, 0usize);
    for a in [3usize, 4] {
        for h in upto(6) {
            let Ok(classes) = degree_ceiling_classes(&h, a) else {
                continue;
            };
            cases += 1;
            match find_katerinis_pair(&h, &classes, a, limits) {
                Ok(p) if p.verify(&h, &classes, a) && p.lhs <= p.rhs => {}
                _ => failures += 1,
            }
        }
        // Every valid class assignment on up to five vertices.
        for h in upto(5) {
            let n = h.order();
            let lows: Vec<usize> = (0..n).map(|x| h.degree(x).max(1)).collect();
            if lows.iter().any(|&l| l > a - 1) {
                continue;
            }
            let mut classes = lows.clone();
            loop {
                cases += 1;
                match find_katerinis_pair(&h, &classes, a, limits) {
                    Ok(p) if p.verify(&h, &classes, a) => {}
                    _ => failures += 1,
                }
                let Some(i) = (0..n).find(|&i| classes[i] < a - 1) else {
                    break;
                };
                classes[i] += 1;
                for c in classes.iter_mut().take(i).zip(&lows) {
                    *c.0 = *c.1;
                }
            }
        }
    }
    o.report(
        7,
        "independent set / cover pairs",
        cases > 0 && failures == 0,
        format!(
            "{cases} (graph, partition) cases for a in {{3,4}}: {failures} without a valid pair"
        ),
        start,
    );
}

fn star_factors(o: &mut Outcomes, limits: &Limits) {
    let start = Instant::now();
    let (mut cases, mut disagreements, mut invalid) = (0usize, 0usize, 0usize);
    for g in upto(7) {
        for m in 1..=3usize {
            cases += 1;
            let crit = check_star_factor(&g, m, limits).unwrap().exists();
            let forest = find_star_factor(&g, m, limits).unwrap();
            let plain = search_ab_factor(&g, 1, m, limits.search_budget)
                .unwrap()
                .is_some();
            if crit != forest.is_some() || crit != plain {
                disagreements += 1;
            }
            if let Some(f) = forest {
                let covered: usize = f.stars.iter().map(|s| 1 + s.leaves.len()).sum();
                if f.validate(&g, m).is_err() || covered != g.order() {
                    invalid += 1;
                }
            }
        }
    }
    o.report(
        8,
        "star factor equivalence",
        disagreements == 0 && invalid == 0,
        format!("{cases} (graph, m) cases on <= 7 vertices: {disagreements} disagreements, {invalid} invalid forests"),
        start,
    );
}

fn saturated_identity(o: &mut Outcomes) {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let mut mismatches = 0;
    for _ in 0..IDENTITY_SAMPLES {
        let n = rng.random_range(1..=12);
        let p = Fraction::new(rng.random_range(0..=10), 10);
        let g = generate_with(n, p, &mut rng).unwrap();
        let s = VertexSet::from_mask(rng.random::<u64>() & g.full_mask());
        let a = rng.random_range(0..=4);
        let b = a + rng.random_range(1..=3);
        if delta(&g, &s, a, b).unwrap() != delta_saturated(&g, &s, a, b).unwrap() {
            mismatches += 1;
        }
    }
    o.report(
        9,
        "low-set cutoff identity",
        mismatches == 0,
        format!("{IDENTITY_SAMPLES} samples: {mismatches} mismatches"),
        start,
    );
}

fn main() {
    let limits = Limits::default();
    let mut o = Outcomes { failed: 0 };
    triangle(&mut o, &limits);
    let random = toughness(&mut o, &limits);
    sharpness(&mut o, &limits);
    campaigns(&mut o, &limits);
    isolated_after_edge_removal(&mut o, &random);
    edge_avoidance(&mut o, &limits);
    independent_cover_pairs(&mut o, &limits);
    star_factors(&mut o, &limits);
    saturated_identity(&mut o);
    if o.failed > 0 {
        println!("{} criteria failed", o.failed);
        std::process::exit(1);
    }
    println!("all 9 criteria passed");
}
