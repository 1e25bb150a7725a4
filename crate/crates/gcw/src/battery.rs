//! The reproduction battery: named checks of published values and of
//! invariant-based properties, each reporting expected against computed.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{stabilizer_under, FiniteField, PermGroup};
use crate::codecore::{distance_partition, error_capacity, is_perfect, min_distance, Code, DistancePartition, PartitionMode};
use crate::constructions::*;
use crate::graphs::Graph;
use crate::structure::{
    is_elusive, is_spherical_bitrade, neighbour_set, reconstruct, verify_quotient_prop, ElusiveSearch, ElusiveVerdict,
};
use crate::symmetry::{
    ambient_group, check_entry_homogeneity, check_local_equivalence, is_s_nt, subgroup_classes, verify_permcode_criterion,
    AutRepresentation,
};
use crate::{Budget, Error, Result};

/// Titles of the acceptance criteria, indexed from 1.
pub const CRITERIA: [&str; 13] = [
    "Golay parameters",
    "Golay complete transitivity",
    "Reed-Muller goldens",
    "Twisted permutation distances",
    "Permutation-code criterion",
    "Cycle codes",
    "Elusive pair",
    "Reconstruction",
    "GQ codes",
    "Hadamard family",
    "Quotient theorem instance",
    "Kneser battery",
    "Property suites",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub criterion: usize,
    pub id: &'static str,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    pub millis: u128,
}

type Outcome = Result<(String, String)>;

/// One named check: `run` returns expected and computed renderings, which
/// pass when equal.
pub struct Check {
    pub criterion: usize,
    pub id: &'static str,
    run: fn(&Budget) -> Outcome,
}

impl Check {
    pub fn run(&self, budget: &Budget) -> CheckResult {
        let start = Instant::now();
        let (expected, computed, pass) = match (self.run)(budget) {
            Ok((e, c)) => {
                let pass = e == c;
                (e, c, pass)
            }
            Err(err) => ("no error".to_string(), format!("error: {err}"), false),
        };
        CheckResult { criterion: self.criterion, id: self.id, expected, computed, pass, millis: start.elapsed().as_millis() }
    }
}

pub fn checks() -> Vec<Check> {
    let c = |criterion, id, run| Check { criterion, id, run };
    vec![
        c(1, "golay23-parameters", golay23_parameters),
        c(1, "golay11-parameters", golay11_parameters),
        c(2, "golay23-complete-transitivity", golay23_complete_transitivity),
        c(3, "reed-muller-grm-2-1-3", grm_golden),
        c(3, "reed-muller-projection", projection_golden),
        c(3, "reed-muller-prm-3-1-2", prm_golden),
        c(4, "twisted-s6", |b| twisted("s6", 8, 4, b)),
        c(4, "twisted-a6", |b| twisted("a6", 8, 6, b)),
        c(4, "twisted-asl3_2", |b| twisted("asl3_2", 12, 8, b)),
        c(5, "permcode-criterion-q3", |b| permcode_criterion(3, b)),
        c(5, "permcode-criterion-q4", |b| permcode_criterion(4, b)),
        c(5, "permcode-criterion-q5", |b| permcode_criterion(5, b)),
        c(6, "cycle-codes", cycle_codes),
        c(7, "elusive-pair-h42", elusive_pair),
        c(8, "golay23-reconstruction", golay23_reconstruction),
        c(9, "gq-w3-partial-ovoid-2", w3_ovoid),
        c(9, "gq-regular-spread-2", |b| regular_spread(2, b)),
        c(9, "gq-regular-spread-3", |b| regular_spread(3, b)),
        c(10, "hadamard12-parameters", |b| parameters("hadamard12", (12, 24, 6, 3), b)),
        c(10, "punct-hadamard11-parameters", |b| parameters("punct_hadamard11", (11, 24, 5, 3), b)),
        c(11, "quotient-h82-reed-muller", reed_muller_quotient),
        c(12, "kneser-int-table", kneser_int_table),
        c(12, "kneser-tetrahedron", kneser_tetrahedron),
        c(13, "properties-orbit-stabilizer", properties_orbit_stabilizer),
        c(13, "properties-partitions", properties_partitions),
        c(13, "properties-local-equivalence", properties_local_equivalence),
        c(13, "properties-entry-homogeneity", properties_entry_homogeneity),
        c(13, "properties-perfect", properties_perfect),
        c(13, "properties-action", properties_action),
    ]
}

/// Checks whose id contains `filter` (all when absent).
pub fn select(filter: Option<&str>) -> Vec<Check> {
    checks().into_iter().filter(|c| filter.map_or(true, |f| c.id.contains(f))).collect()
}

pub fn run(filter: Option<&str>, budget: &Budget) -> Vec<CheckResult> {
    select(filter).iter().map(|c| c.run(budget)).collect()
}

fn render_parameters(n: usize, size: usize, delta: usize, rho: usize) -> String {
    format!("(n={n}, |C|={size}, δ={delta}, ρ={rho})")
}

fn code_parameters(c: &Code, budget: &Budget) -> Result<String> {
    let rho = DistancePartition::best(c, budget)?.rho().ok_or_else(|| Error::Precondition("no exact partition".into()))?;
    Ok(render_parameters(c.length().unwrap_or(0), c.len(), min_distance(c, budget)?, rho))
}

fn parameters(name: &str, (n, size, delta, rho): (usize, usize, usize, usize), budget: &Budget) -> Outcome {
    Ok((render_parameters(n, size, delta, rho), code_parameters(&classical_code(name)?, budget)?))
}

fn golay23_parameters(budget: &Budget) -> Outcome {
    parameters("golay23", (23, 4096, 7, 3), budget)
}

fn golay11_parameters(budget: &Budget) -> Outcome {
    parameters("golay11", (11, 729, 5, 2), budget)
}

fn golay_rep() -> Result<AutRepresentation> {
    Ok(AutRepresentation::wreath(golay23_aut()?, 2))
}

fn golay23_complete_transitivity(budget: &Budget) -> Outcome {
    let c = classical_code("golay23")?;
    let r = is_s_nt(&c, &golay_rep()?, 3, budget)?;
    Ok(("s_nt=true, completely_transitive=true".into(), format!("s_nt={}, completely_transitive={}", r.s_nt, r.completely_transitive == Some(true))))
}

fn tuple_set(c: &Code) -> Result<BTreeSet<String>> {
    let h = c.graph().as_hamming().ok_or_else(|| Error::Precondition("not a Hamming code".into()))?;
    Ok(c.words().iter().map(|&w| h.digits(w).iter().map(u32::to_string).collect::<Vec<_>>().join("")).collect())
}

fn golden(rows: &[&str]) -> BTreeSet<String> {
    rows.iter().map(|r| r.to_string()).collect()
}

const GRM_2_1_3: [&str; 16] = [
    "11111111", "00000000", "11110000", "00001111", "11001100", "00110011", "11000011", "00111100",
    "10101010", "01010101", "10100101", "01011010", "10011001", "01100110", "10010110", "01101001",
];

fn grm_golden(_: &Budget) -> Outcome {
    let got = tuple_set(&grm(2, 1, 3)?)?;
    Ok((format!("{} tuples, golden", GRM_2_1_3.len()), format!("{} tuples, {}", got.len(), verdict(got == golden(&GRM_2_1_3)))))
}

fn verdict(same: bool) -> &'static str {
    if same {
        "golden"
    } else {
        "differs from golden"
    }
}

fn projection_golden(_: &Budget) -> Outcome {
    let expected = golden(&["1111", "0000", "1100", "0011", "1010", "0101", "1001", "0110"]);
    let got = tuple_set(&project_code(&grm(2, 1, 3)?, &[0, 1, 2, 3])?)?;
    Ok(("8 tuples, golden".into(), format!("{} tuples, {}", got.len(), verdict(got == expected))))
}

fn prm_golden(budget: &Budget) -> Outcome {
    let expected = golden(&["0000", "0111", "0222", "1012", "2021", "2102", "1201", "2210", "1120"]);
    let c = prm(3, 1, 2)?;
    let got = tuple_set(&c)?;
    Ok((
        "9 tuples, golden, δ=3, cyclic=false".into(),
        format!("{} tuples, {}, δ={}, cyclic={}", got.len(), verdict(got == expected), min_distance(&c, budget)?, is_cyclic(&c, budget)?),
    ))
}

fn twisted(name: &str, tw: usize, rep: usize, budget: &Budget) -> Outcome {
    let (t, rho) = shipped_twisted_pair(name, budget)?;
    let natural = Representation::natural(&t);
    let twisted = twisted_permutation_code(&t, &[natural.clone(), rho], budget)?;
    let repeated = twisted_permutation_code(&t, &[natural.clone(), natural], budget)?;
    Ok((format!("δ_tw/δ_rep = {tw}/{rep}"), format!("δ_tw/δ_rep = {}/{}", min_distance(&twisted, budget)?, min_distance(&repeated, budget)?)))
}

fn permcode_criterion(q: usize, budget: &Budget) -> Outcome {
    let classes = subgroup_classes(q)?;
    let mut agree = 0;
    for t in &classes {
        let r = verify_permcode_criterion(t, None, budget)?;
        agree += usize::from(r.diagonal_nt == r.normalizer_two_transitive);
    }
    Ok((format!("{0} classes, {0} agree", classes.len()), format!("{} classes, {agree} agree", classes.len())))
}

fn cycle_codes(budget: &Budget) -> Outcome {
    let mut expected = Vec::new();
    let mut computed = Vec::new();
    for n in 2..=8 {
        let c = cycle_code(n)?;
        let r = is_s_nt(&c, &AutRepresentation::Vertex(cycle_code_group(n)?), n / 2, budget)?;
        let sizes: Vec<u64> = (1..=n / 2).map(|i| if 2 * i == n { 2 } else { 4 }).collect();
        expected.push(format!("n={n}: CT, {sizes:?}"));
        let ct = if r.completely_transitive == Some(true) { "CT" } else { "not CT" };
        computed.push(format!("n={n}: {ct}, {:?}", &r.level_sizes[1..]));
    }
    Ok((expected.join("; "), computed.join("; ")))
}

fn hamming_code_from(graph: &Arc<Graph>, labels: &[&str]) -> Result<Code> {
    Code::new(graph.clone(), labels.iter().map(|l| graph.parse_label(l)).collect::<Result<Vec<_>>>()?)
}

fn elusive_pair(budget: &Budget) -> Outcome {
    let graph = Arc::new(Graph::hamming(4, 2)?);
    let c = hamming_code_from(&graph, &["0000", "1111"])?;
    let c2 = hamming_code_from(&graph, &["0000", "1010", "0101", "1111"])?;
    let x = hamming_code_from(&graph, &["0001", "0010", "1101", "1110", "0100", "1000", "0111", "1011"])?;
    let shared = neighbour_set(&c).members() == x.words() && neighbour_set(&c2).members() == x.words();
    let bitrade = match is_elusive(&c, ElusiveSearch::Ambient(None), budget)? {
        ElusiveVerdict::Elusive(w) => {
            let image = hamming_code_from(&graph, &w.image.iter().map(String::as_str).collect::<Vec<_>>())?;
            Some(is_spherical_bitrade(&c, &image)?.holds)
        }
        _ => None,
    };
    Ok((
        "C_1 = C'_1 = X: true, witness: true, bitrade: true".into(),
        format!("C_1 = C'_1 = X: {shared}, witness: {}, bitrade: {}", bitrade.is_some(), bitrade == Some(true)),
    ))
}

fn golay23_reconstruction(budget: &Budget) -> Outcome {
    let c = classical_code("golay23")?;
    let back = reconstruct(&neighbour_set(&c), budget)?;
    Ok(("4096 codewords, equal: true".into(), format!("{} codewords, equal: {}", back.len(), back.same_set(&c))))
}

fn incidence_points(c: &Code) -> Result<usize> {
    match c.graph().as_ref() {
        Graph::Explicit(e) => e.points.ok_or_else(|| Error::Precondition("not an incidence graph".into())),
        _ => Err(Error::Precondition("not an incidence graph".into())),
    }
}

fn delta_rho(c: &Code, budget: &Budget) -> Result<(usize, usize, DistancePartition)> {
    let p = DistancePartition::best(c, budget)?;
    let rho = p.rho().ok_or_else(|| Error::Precondition("no exact partition".into()))?;
    Ok((min_distance(c, budget)?, rho, p))
}

fn w3_ovoid(budget: &Budget) -> Outcome {
    let gens = shipped_sl2_subgroup(2).ok_or_else(|| Error::Precondition("no shipped SL_2(2) subgroup".into()))?;
    let c = w3_partial_ovoid(2)?;
    let rep = AutRepresentation::Vertex(partial_ovoid_group(2, &gens)?);
    let (delta, rho, p) = delta_rho(&c, budget)?;
    // codewords are lines; maximal when every other line meets one of
    // them, i.e. lies at distance 2
    let points = incidence_points(&c)?;
    let lines = c.graph().vertex_count() - points;
    let level2 = p.level_set(2, budget)?;
    let maximal = level2.iter().filter(|&&v| v >= points).count() == lines - c.len();
    let nt = is_s_nt(&c, &rep, 1, budget)?.s_nt;
    Ok((
        "δ=4, ρ=3, maximal=true, neighbour-transitive=true".into(),
        format!("δ={delta}, ρ={rho}, maximal={maximal}, neighbour-transitive={nt}"),
    ))
}

fn regular_spread(q: u32, budget: &Budget) -> Outcome {
    let c = regular_spread_code(q)?;
    let rep = AutRepresentation::Vertex(spread_group(q)?);
    let (delta, rho, _) = delta_rho(&c, budget)?;
    let ct = crate::symmetry::is_completely_transitive(&c, &rep, budget)?;
    Ok(("δ=4, ρ=2, completely transitive=true".into(), format!("δ={delta}, ρ={rho}, completely transitive={ct}")))
}

/// `H(8,2)` with `G = T_V ⋊ AGL_3(2)` and `N = T_{RM(1,3)}`.
pub fn reed_muller_quotient_instance() -> Result<(Code, AutRepresentation, PermGroup)> {
    let rm = grm(2, 1, 3)?;
    let f = FiniteField::of_order(2)?;
    let units: Vec<Vec<u32>> = (0..8).map(|i| (0..8).map(|j| u32::from(i == j)).collect()).collect();
    let g = affine_code_group(&rm, 2, 3)?.join(&translation_group(&f, &units)?);
    let generator = &rm.linear_descriptor().ok_or_else(|| Error::Precondition("RM code is not linear".into()))?.generator;
    let n = translation_group(&f, generator)?;
    Ok((rm, AutRepresentation::wreath(g, 2), n))
}

fn reed_muller_quotient(budget: &Budget) -> Outcome {
    let (rm, g, n) = reed_muller_quotient_instance()?;
    let r = verify_quotient_prop(rm.graph(), &g, n.gens(), 0, 2, budget)?;
    Ok((
        "16 blocks, hypotheses=true, (G/N,2)-distance-transitive=true".into(),
        format!("{} blocks, hypotheses={}, (G/N,2)-distance-transitive={}", r.blocks, r.hypotheses(), r.quotient.holds),
    ))
}

/// Instances of the three `C_int` table lines for `7 ≤ v ≤ 9`, with the
/// stated minimum distance.
pub fn kneser_int_rows() -> Vec<(usize, [usize; 4], usize)> {
    let mut rows = Vec::new();
    for v in 7..=9usize {
        for k in 2..=(v - 1) / 2 {
            rows.push((1, [1, v - 1, 0, k], 1));
            if v == 2 * k + 1 {
                for e in 1..=k {
                    rows.push((2, [2 * e, 2 * (k - e) + 1, e, k - e], 1));
                }
            }
            for a in 1..k {
                rows.push((3, [a, v - a, a, k - a], 2));
            }
        }
    }
    rows
}

fn kneser_int_table(budget: &Budget) -> Outcome {
    let rows = kneser_int_rows();
    let mut bad = Vec::new();
    for &(line, [a, b, c, d], delta) in &rows {
        let code = kneser_int(a, b, c, d)?;
        let rep = AutRepresentation::UnderlyingSet(split_symmetric(a + b, a)?);
        let got = min_distance(&code, budget)?;
        let nt = is_s_nt(&code, &rep, 1, budget)?.s_nt;
        if got != delta || !nt {
            bad.push(format!("line {line} ({a},{b};{c},{d}): δ={got}, NT={nt}"));
        }
    }
    let computed = if bad.is_empty() { format!("{} rows match", rows.len()) } else { bad.join("; ") };
    Ok((format!("{} rows match", rows.len()), computed))
}

fn kneser_tetrahedron(budget: &Budget) -> Outcome {
    let c = tetrahedron_code()?;
    let rep = AutRepresentation::UnderlyingSet(tetrahedron_group()?);
    let nt = is_s_nt(&c, &rep, 1, budget)?.s_nt;
    Ok(("560 codewords in K(13,6), neighbour-transitive=true".into(), format!("{} codewords in K(13,6), neighbour-transitive={nt}", c.len())))
}

/// A code together with a group preserving it.
pub struct Instance {
    pub name: String,
    pub code: Code,
    pub group: Option<AutRepresentation>,
}

/// The shipped catalog, with the shipped automorphism groups where there
/// are any.
pub fn catalog_instances() -> Result<Vec<Instance>> {
    catalog()
        .into_iter()
        .map(|e| {
            let group = match e.name {
                "golay23" => Some(AutRepresentation::wreath(golay23_aut()?, 2)),
                "golay24" => Some(AutRepresentation::wreath(golay24_aut()?, 2)),
                _ => None,
            };
            Ok(Instance { name: e.name.to_string(), code: classical_code(e.name)?, group })
        })
        .collect()
}

/// 100 seeded instances. Half are orbits of random vertices under groups
/// generated by two random elements of `S_q ≀ S_n` (`3 ≤ n ≤ 6`, `q ≤ 3`);
/// half are orbits of a codeword under two random automorphisms of a small
/// code with `δ ≥ 3`, so that they inherit `e ≥ 1`.
pub fn random_instances(seed: u64, budget: &Budget) -> Result<Vec<Instance>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < 50 {
        let n = rng.gen_range(3..=6usize);
        let q = rng.gen_range(2..=3usize);
        let ambient = hamming_automorphisms(n, q)?;
        let group = PermGroup::new(n * q, vec![ambient.random_element(&mut rng), ambient.random_element(&mut rng)])?;
        let graph = Arc::new(Graph::hamming(n, q)?);
        let action = OnHamming::new(graph.as_hamming().expect("hamming"));
        let seed_vertex = rng.gen_range(0..graph.vertex_count());
        let words = crate::algebra::orbit(group.gens(), &seed_vertex, &action);
        if words.len() < 2 || words.len() == graph.vertex_count() {
            continue;
        }
        let name = format!("random H({n},{q}) #{}", out.len());
        out.push(Instance { name, code: Code::new(graph, words)?, group: Some(AutRepresentation::wreath(group, q)) });
    }
    let bases = [hamming_code(2, 3)?, hamming_code(3, 2)?, prm(2, 1, 3)?, repetition(5, 2)?, repetition(4, 3)?];
    let auts = bases.iter().map(|c| crate::symmetry::aut_bruteforce(c, None, budget)).collect::<Result<Vec<_>>>()?;
    while out.len() < 100 {
        let k = rng.gen_range(0..bases.len());
        let (base, aut) = (&bases[k], &auts[k]);
        let group = PermGroup::new(aut.group().degree(), vec![aut.group().random_element(&mut rng), aut.group().random_element(&mut rng)])?;
        let rep = aut.with_group(group);
        let action = rep.vertex_action(base.graph())?;
        let words = crate::algebra::orbit(rep.group().gens(), &base.words()[0], &action);
        if words.len() < 2 {
            continue;
        }
        let name = format!("random subcode of {} #{}", base.name(), out.len());
        out.push(Instance { name, code: Code::new(base.graph().clone(), words)?, group: Some(rep) });
    }
    Ok(out)
}

/// Random linear codes over GF(2) and GF(3), for syndrome partitions.
fn random_linear_codes(seed: u64, count: usize) -> Result<Vec<Code>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let q = rng.gen_range(2..=3u32);
            let n = rng.gen_range(4..=8usize);
            let k = rng.gen_range(1..n.min(4));
            let field = Arc::new(FiniteField::of_order(q)?);
            let rows = (0..k).map(|_| (0..n).map(|_| rng.gen_range(0..q)).collect()).collect();
            Code::linear(field, rows)
        })
        .collect()
}

fn all_instances(budget: &Budget) -> Result<Vec<Instance>> {
    let mut all = catalog_instances()?;
    all.extend(random_instances(13, budget)?);
    Ok(all)
}

/// Runs `property` on every instance; `None` means not applicable.
fn tally(instances: &[Instance], mut property: impl FnMut(&Instance) -> Result<Option<bool>>) -> Outcome {
    let (mut applied, mut failed) = (0, Vec::new());
    for inst in instances {
        match property(inst)? {
            Some(true) => applied += 1,
            Some(false) => {
                applied += 1;
                failed.push(inst.name.clone());
            }
            None => {}
        }
    }
    let computed = if failed.is_empty() { format!("{applied} instances hold") } else { format!("fails on {}", failed.join(", ")) };
    Ok((format!("{applied} instances hold"), computed))
}

fn properties_orbit_stabilizer(budget: &Budget) -> Outcome {
    tally(&all_instances(budget)?, |inst| {
        let Some(rep) = &inst.group else { return Ok(None) };
        let action = rep.vertex_action(inst.code.graph())?;
        let alpha = inst.code.words()[0];
        let (stab, orbit) = stabilizer_under(rep.group(), &alpha, &action, budget)?;
        let mut holds = stab.order() * orbit as u128 == rep.group().order() && orbit == inst.code.len();
        // exhaustive element count for small groups
        if rep.group().order() <= 50_000 {
            let mut fixing = 0u128;
            rep.group().chain().for_each_element(|g| {
                fixing += u128::from(action.apply(alpha, g) == alpha);
                true
            });
            holds &= fixing == stab.order();
        }
        Ok(Some(holds))
    })
}

fn properties_partitions(budget: &Budget) -> Outcome {
    let mut codes: Vec<Instance> = all_instances(budget)?;
    for (k, code) in random_linear_codes(29, 30)?.into_iter().enumerate() {
        codes.push(Instance { name: format!("random linear #{k}"), code, group: None });
    }
    tally(&codes, |inst| {
        let c = &inst.code;
        let e = error_capacity(min_distance(c, budget)?);
        let spheres = distance_partition(c, PartitionMode::Spheres(e), budget)?;
        let mut exact = Vec::new();
        if c.graph().vertex_count() as u64 <= budget.dense_vertices {
            exact.push(distance_partition(c, PartitionMode::Dense, budget)?);
        }
        if c.linear_descriptor().is_some() {
            exact.push(distance_partition(c, PartitionMode::Syndrome, budget)?);
        }
        let mut holds = true;
        for p in &exact {
            for i in 0..=e {
                holds &= p.level_set(i, budget)? == spheres.level_set(i, budget)?;
            }
        }
        if let [a, b] = &exact[..] {
            holds &= a.level_sizes() == b.level_sizes() && a.rho() == b.rho();
        }
        Ok(Some(holds))
    })
}

fn properties_local_equivalence(budget: &Budget) -> Outcome {
    tally(&all_instances(budget)?, |inst| {
        let Some(rep) = &inst.group else { return Ok(None) };
        let e = error_capacity(min_distance(&inst.code, budget)?);
        if e == 0 {
            return Ok(None);
        }
        for s in 1..=e.min(2) {
            match check_local_equivalence(&inst.code, rep, s, budget) {
                Ok(eq) if eq.agree() => {}
                Ok(_) | Err(Error::Contradiction(_)) => return Ok(Some(false)),
                Err(err) => return Err(err),
            }
        }
        Ok(Some(true))
    })
}

fn properties_entry_homogeneity(budget: &Budget) -> Outcome {
    tally(&all_instances(budget)?, |inst| {
        let Some(rep) = &inst.group else { return Ok(None) };
        let e = error_capacity(min_distance(&inst.code, budget)?);
        let mut holds = None;
        for s in 1..=e.min(3) {
            if is_s_nt(&inst.code, rep, s, budget)?.s_nt {
                let homogeneous = check_entry_homogeneity(&inst.code, rep, s, budget)?;
                holds = Some(holds.unwrap_or(true) && homogeneous);
            }
        }
        Ok(holds)
    })
}

fn properties_perfect(budget: &Budget) -> Outcome {
    let mut codes = all_instances(budget)?;
    for (k, code) in random_linear_codes(31, 30)?.into_iter().enumerate() {
        codes.push(Instance { name: format!("random linear #{k}"), code, group: None });
    }
    for (q, t) in [(2, 3), (2, 4), (3, 2)] {
        codes.push(Instance { name: format!("hamming code q={q} t={t}"), code: hamming_code(q, t)?, group: None });
    }
    tally(&codes, |inst| {
        let c = &inst.code;
        let e = error_capacity(min_distance(c, budget)?);
        let rho = DistancePartition::best(c, budget)?.rho().ok_or_else(|| Error::Precondition("no exact partition".into()))?;
        Ok(Some(is_perfect(c, budget)? == (rho == e)))
    })
}

fn properties_action(budget: &Budget) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut instances = all_instances(budget)?;
    for inst in instances.iter_mut().filter(|i| i.group.is_none()) {
        if let Ok(rep) = ambient_group(inst.code.graph()) {
            inst.group = Some(rep);
        }
    }
    tally(&instances, |inst| {
        let Some(rep) = &inst.group else { return Ok(None) };
        let graph = inst.code.graph();
        let action = rep.vertex_action(graph)?;
        let mut holds = true;
        for _ in 0..20 {
            let (g, h) = (rep.group().random_element(&mut rng), rep.group().random_element(&mut rng));
            let v = rng.gen_range(0..graph.vertex_count());
            holds &= action.apply(action.apply(v, &g), &h) == action.apply(v, &g.compose(&h));
            let u = graph.neighbors(v)[0];
            holds &= graph.distance(action.apply(v, &g), action.apply(u, &g)) == Some(1);
        }
        Ok(Some(holds))
    })
}

/// Summary line per criterion: PASS when every selected check passes.
pub fn criterion_lines(results: &[CheckResult]) -> Vec<(usize, bool, String)> {
    (1..=CRITERIA.len())
        .filter_map(|k| {
            let mine: Vec<&CheckResult> = results.iter().filter(|r| r.criterion == k).collect();
            if mine.is_empty() {
                return None;
            }
            let pass = mine.iter().all(|r| r.pass);
            let detail = mine
                .iter()
                .filter(|r| !r.pass)
                .map(|r| format!("{}: expected {}, computed {}", r.id, r.expected, r.computed))
                .collect::<Vec<_>>()
                .join("; ");
            Some((k, pass, detail))
        })
        .collect()
}
