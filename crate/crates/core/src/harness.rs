//! Runs each characterization over a corpus: the graph side is decided by
//! pattern search, the group side by [`rhs_predicate`], and every entry
//! records whether they agree.

use std::sync::{Arc, OnceLock};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::classifiers::{compute_structure_flags, rhs_predicate, Factorization, RhsArgs, StructureFlags, TheoremId};
use crate::constructors::{build_group_with_cap, direct_product, parse_group_spec, GroupSpec};
use crate::error::{Error, Result};
use crate::group::{group_cap, ElementOrderProfile, Group};
use crate::patterns::{catalog, is_chordal, Detector, FreenessReport, HoleQuery, Parity, Pattern, Witness};
use crate::power_graph::{build_power_graph, build_prime_graph, Graph};

/// Largest product order admitted to the direct-product case.
pub const PRODUCT_ORDER_LIMIT: usize = 2048;

/// Order cap used with `allow_large` when `PG_GROUP_CAP` is unset.
pub const LARGE_CAP: usize = 1 << 17;

/// Members of the default corpus whose ordered pairs form the
/// direct-product case.
pub const PRODUCT_SUBCORPUS: [&str; 13] =
    ["C2", "C3", "C4", "C8", "C9", "C5", "C7", "E2^2", "S3", "SD(7,3,2)", "Q8", "D4", "C6"];

/// Field orders of the Suzuki groups checked number-theoretically.
pub const SZ_PARAMETERS: [u64; 5] = [8, 32, 128, 512, 2048];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusEntry {
    pub spec: String,
    pub family: String,
    pub nilpotent_expected: Option<bool>,
    pub eppo_expected: Option<bool>,
}

impl CorpusEntry {
    fn parsed(spec: &str) -> Result<CorpusEntry> {
        let parsed = parse_group_spec(spec).map_err(|e| build_error(spec, e))?;
        Ok(CorpusEntry {
            spec: parsed.to_string(),
            family: parsed.family().to_string(),
            nilpotent_expected: None,
            eppo_expected: None,
        })
    }

    fn tagged(spec: &str, nilpotent: bool, eppo: bool) -> CorpusEntry {
        let mut e = CorpusEntry::parsed(spec).expect("default corpus parses");
        e.nilpotent_expected = Some(nilpotent);
        e.eppo_expected = Some(eppo);
        e
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Corpus {
    pub groups: Vec<CorpusEntry>,
    /// Suzuki field orders, evaluated without a graph side.
    pub sz_parameters: Vec<u64>,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.groups.len() + self.sz_parameters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn is_prime_power_or_one(n: u32) -> bool {
    n == 1 || crate::classifiers::is_prime_power(n as u64).is_some()
}

pub fn default_corpus() -> Corpus {
    let mut groups = Vec::new();
    for n in (1..=16).chain([18, 20, 24, 30, 36, 48, 100]) {
        groups.push(CorpusEntry::tagged(&format!("C{n}"), true, is_prime_power_or_one(n)));
    }
    for n in 3..=8u32 {
        groups.push(CorpusEntry::tagged(&format!("D{n}"), n.is_power_of_two(), is_prime_power_or_one(n)));
    }
    let fixed: [(&str, bool, bool); 31] = [
        ("Q8", true, true),
        ("Q16", true, true),
        ("E2^2", true, true),
        ("E2^3", true, true),
        ("E2^4", true, true),
        ("E3^2", true, true),
        ("S2", true, true),
        ("S3", false, true),
        ("S4", false, true),
        ("S5", false, false),
        ("S6", false, false),
        ("A4", false, true),
        ("A5", false, true),
        ("A6", false, true),
        ("A7", false, false),
        ("SD(3,2,2)", false, true),
        ("SD(7,3,2)", false, true),
        ("SD(5,4,2)", false, true),
        ("SD(5,4,4)", false, false),
        ("SD(9,2,8)", false, true),
        ("SD(15,2,14)", false, false),
        ("C3xC3", true, true),
        ("C2xC6", true, false),
        ("C4xC9", true, false),
        ("PSL(2,4)", false, true),
        ("PSL(2,5)", false, true),
        ("PSL(2,7)", false, true),
        ("PSL(2,8)", false, true),
        ("PSL(2,9)", false, true),
        ("PSL(2,11)", false, false),
        ("PSL(2,13)", false, false),
    ];
    for (spec, nilpotent, eppo) in fixed {
        groups.push(CorpusEntry::tagged(spec, nilpotent, eppo));
    }
    groups.push(CorpusEntry::tagged("E2^3xC9", true, false));
    Corpus { groups, sz_parameters: SZ_PARAMETERS.to_vec() }
}

/// One spec per line; `#` starts a comment. `Sz(q)` lines add a Suzuki
/// parameter.
pub fn parse_corpus(text: &str) -> Result<Corpus> {
    let mut corpus = Corpus::default();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let compact: String = line.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(q) = compact.strip_prefix("Sz(").and_then(|r| r.strip_suffix(')')) {
            let q: u64 = q.parse().map_err(|_| Error::InvalidParameter(format!("bad Suzuki parameter `{line}`")))?;
            crate::classifiers::sz_numbers(q)?;
            corpus.sz_parameters.push(q);
        } else {
            corpus.groups.push(CorpusEntry::parsed(line)?);
        }
    }
    Ok(corpus)
}

pub fn load_corpus(path: &std::path::Path) -> Result<Corpus> {
    parse_corpus(&std::fs::read_to_string(path)?)
}

fn build_error(spec: &str, e: Error) -> Error {
    Error::Build { spec: spec.to_string(), source: Box::new(e) }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HarnessOptions {
    pub min_hole_length: usize,
    pub allow_large: bool,
    pub parallel: bool,
}

impl Default for HarnessOptions {
    fn default() -> Self {
        HarnessOptions { min_hole_length: 4, allow_large: false, parallel: true }
    }
}

impl HarnessOptions {
    fn cap(&self) -> usize {
        if self.allow_large && std::env::var_os("PG_GROUP_CAP").is_none() {
            LARGE_CAP
        } else {
            group_cap()
        }
    }
}

/// A built corpus member with lazily built power graphs.
pub struct Prepared {
    pub entry: CorpusEntry,
    pub spec: GroupSpec,
    pub group: Arc<Group>,
    pub flags: StructureFlags,
    full: OnceLock<Graph>,
    proper: OnceLock<Graph>,
}

impl Prepared {
    fn build(entry: &CorpusEntry, cap: usize) -> Result<Prepared> {
        let spec = parse_group_spec(&entry.spec).map_err(|e| build_error(&entry.spec, e))?;
        let group = build_group_with_cap(&spec, cap).map_err(|e| build_error(&entry.spec, e))?;
        let flags = compute_structure_flags(&group);
        Ok(Prepared {
            entry: entry.clone(),
            spec,
            group: Arc::new(group),
            flags,
            full: OnceLock::new(),
            proper: OnceLock::new(),
        })
    }

    pub fn power_graph(&self) -> &Graph {
        self.full.get_or_init(|| build_power_graph(&self.group, false))
    }

    pub fn proper_power_graph(&self) -> &Graph {
        self.proper.get_or_init(|| build_power_graph(&self.group, true))
    }
}

pub fn prepare(corpus: &Corpus, options: &HarnessOptions) -> Result<Vec<Prepared>> {
    let cap = options.cap();
    if options.parallel {
        corpus.groups.par_iter().map(|e| Prepared::build(e, cap)).collect()
    } else {
        corpus.groups.iter().map(|e| Prepared::build(e, cap)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryRecord {
    pub group: String,
    /// `None` when only the group side is evaluated.
    pub graph_side: Option<bool>,
    pub rhs: bool,
    pub agree: bool,
    pub witness: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub entries: Vec<EntryRecord>,
    pub mismatches: usize,
    pub ms: u64,
}

impl VerificationReport {
    pub fn entry(&self, group: &str) -> Option<&EntryRecord> {
        self.entries.iter().find(|e| e.group == group)
    }

    /// The report with timing removed, for comparisons.
    pub fn without_timing(&self) -> VerificationReport {
        VerificationReport { ms: 0, ..self.clone() }
    }
}

fn patterns(names: &[&str]) -> Vec<Pattern> {
    names.iter().map(|n| crate::patterns::pattern(n).expect("catalog name")).collect()
}

fn freeness(graph: &Graph, names: &[&str]) -> (bool, Option<Witness>) {
    let report = Detector::new(graph).is_free(&patterns(names));
    (report.free, report.first_witness().cloned())
}

/// `{even hole, diamond}`-freeness. Chordal graphs have no holes, so the
/// exhaustive hole search only runs on diamond-free non-chordal graphs.
pub fn even_hole_diamond_free(graph: &Graph, min_hole_length: usize) -> (bool, Option<Witness>) {
    let detector = Detector::new(graph);
    if let Some(w) = detector.find(&patterns(&["diamond"])[0]) {
        return (false, Some(w));
    }
    if is_chordal(graph).0 {
        return (true, None);
    }
    let query = HoleQuery { parity: Parity::Even, min_len: min_hole_length, max_len: None };
    match detector.find_hole(query) {
        Some(w) => (false, Some(w)),
        None => (true, None),
    }
}

/// Graph-side property of a single-group theorem, on the graph it concerns.
fn graph_side(id: TheoremId, p: &Prepared, options: &HarnessOptions) -> (bool, Option<Witness>) {
    match id {
        TheoremId::Chain => Detector::new(p.proper_power_graph()).is_chain_graph(),
        TheoremId::P5Nilp => freeness(p.power_graph(), &["P5"]),
        TheoremId::P5P5bNilp | TheoremId::Sn | TheoremId::An | TheoremId::Psl2 => {
            freeness(p.power_graph(), &["P5", "P5bar"])
        }
        TheoremId::P2P3Nilp | TheoremId::P2P3NonNilp => freeness(p.power_graph(), &["P2uP3", "P2uP3bar"]),
        TheoremId::Diamond => freeness(p.power_graph(), &["diamond"]),
        TheoremId::EvenHoleDiamond => even_hole_diamond_free(p.power_graph(), options.min_hole_length),
        TheoremId::DiamondCoDiamond => freeness(p.power_graph(), &["diamond", "co-diamond"]),
        TheoremId::CographNullPrime | TheoremId::CographNilp => Detector::new(p.power_graph()).is_cograph(),
        TheoremId::ChordalNilp => is_chordal(p.power_graph()),
        TheoremId::P5P5bProduct | TheoremId::Sz => unreachable!("not a single-group case"),
    }
}

/// Which corpus members a single-group case applies to, and its rhs input.
fn applicable<'a>(id: TheoremId, p: &'a Prepared) -> Option<RhsArgs<'a>> {
    let f = &p.flags;
    let one = Some(RhsArgs::Group(f));
    match id {
        TheoremId::Chain
        | TheoremId::Diamond
        | TheoremId::EvenHoleDiamond
        | TheoremId::DiamondCoDiamond => one,
        TheoremId::P5Nilp
        | TheoremId::P5P5bNilp
        | TheoremId::P2P3Nilp
        | TheoremId::ChordalNilp
        | TheoremId::CographNilp => one.filter(|_| f.is_nilpotent),
        TheoremId::P2P3NonNilp => one.filter(|_| !f.is_nilpotent),
        TheoremId::CographNullPrime => one.filter(|_| f.is_eppo),
        TheoremId::Sn => match p.spec {
            GroupSpec::Symmetric(n) => Some(RhsArgs::Degree(n)),
            _ => None,
        },
        TheoremId::An => match p.spec {
            GroupSpec::Alternating(n) => Some(RhsArgs::Degree(n)),
            _ => None,
        },
        TheoremId::Psl2 => match p.spec {
            GroupSpec::Psl2(q) => Some(RhsArgs::FieldOrder(q as u64)),
            _ => None,
        },
        TheoremId::P5P5bProduct | TheoremId::Sz => None,
    }
}

fn record(group: String, graph: Option<bool>, rhs: bool, witness: Option<Witness>) -> EntryRecord {
    let agree = graph.is_none_or(|g| g == rhs);
    let witness = witness.filter(|_| graph == Some(false)).map(|w| w.labels);
    EntryRecord { group, graph_side: graph, rhs, agree, witness }
}

fn finish(id: TheoremId, entries: Vec<EntryRecord>, start: Instant) -> VerificationReport {
    VerificationReport {
        theorem: id.as_str().to_string(),
        mismatches: entries.iter().filter(|e| !e.agree).count(),
        entries,
        ms: start.elapsed().as_millis() as u64,
    }
}

/// Ordered pairs of product sub-corpus members present in the corpus.
fn product_pairs(prepared: &[Prepared], cap: usize) -> Vec<(&Prepared, &Prepared)> {
    let members: Vec<&Prepared> =
        prepared.iter().filter(|p| PRODUCT_SUBCORPUS.contains(&p.entry.spec.as_str())).collect();
    let limit = PRODUCT_ORDER_LIMIT.min(cap);
    let mut pairs = Vec::new();
    for &g in &members {
        for &h in &members {
            if g.group.order() * h.group.order() <= limit {
                pairs.push((g, h));
            }
        }
    }
    pairs
}

pub fn run_theorem_case_prepared(
    id: TheoremId,
    prepared: &[Prepared],
    sz_parameters: &[u64],
    options: &HarnessOptions,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let entries: Vec<EntryRecord> = match id {
        TheoremId::Sz => sz_parameters
            .iter()
            .map(|&q| Ok(record(format!("Sz({q})"), None, rhs_predicate(id, RhsArgs::FieldOrder(q))?, None)))
            .collect::<Result<_>>()?,
        TheoremId::P5P5bProduct => {
            let pairs = product_pairs(prepared, options.cap());
            let eval = |&(g, h): &(&Prepared, &Prepared)| -> Result<EntryRecord> {
                let prod = direct_product(g.group.clone(), h.group.clone(), options.cap())
                    .map_err(|e| build_error(&format!("{}x{}", g.entry.spec, h.entry.spec), e))?;
                let (free, w) = freeness(&build_power_graph(&prod, false), &["P5", "P5bar"]);
                let rhs = rhs_predicate(id, RhsArgs::Pair(&g.flags, &h.flags))?;
                Ok(record(prod.label().to_string(), Some(free), rhs, w))
            };
            if options.parallel {
                pairs.par_iter().map(eval).collect::<Result<_>>()?
            } else {
                pairs.iter().map(eval).collect::<Result<_>>()?
            }
        }
        _ => {
            let eval = |p: &Prepared| -> Result<Option<EntryRecord>> {
                let Some(args) = applicable(id, p) else {
                    return Ok(None);
                };
                let rhs = rhs_predicate(id, args)?;
                let (side, w) = graph_side(id, p, options);
                Ok(Some(record(p.entry.spec.clone(), Some(side), rhs, w)))
            };
            let rows: Vec<Option<EntryRecord>> = if options.parallel {
                prepared.par_iter().map(eval).collect::<Result<_>>()?
            } else {
                prepared.iter().map(eval).collect::<Result<_>>()?
            };
            rows.into_iter().flatten().collect()
        }
    };
    Ok(finish(id, entries, start))
}

pub fn run_theorem_case(id: &str, corpus: &Corpus, options: &HarnessOptions) -> Result<VerificationReport> {
    let id: TheoremId = id.parse()?;
    let prepared = prepare(corpus, options)?;
    run_theorem_case_prepared(id, &prepared, &corpus.sz_parameters, options)
}

/// Every theorem and sanity case, in [`TheoremId::ALL`] order.
pub fn run_all(corpus: &Corpus, options: &HarnessOptions) -> Result<Vec<VerificationReport>> {
    let prepared = prepare(corpus, options)?;
    let run = |&id: &TheoremId| run_theorem_case_prepared(id, &prepared, &corpus.sz_parameters, options);
    if options.parallel {
        TheoremId::ALL.par_iter().map(run).collect()
    } else {
        TheoremId::ALL.iter().map(run).collect()
    }
}

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub proper: bool,
    pub patterns: Vec<Pattern>,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { proper: false, patterns: catalog() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrimeGraphSummary {
    pub vertices: Vec<u64>,
    pub edges: Vec<[u64; 2]>,
    pub null: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl From<(bool, Option<Witness>)> for PropertyResult {
    fn from((holds, witness): (bool, Option<Witness>)) -> Self {
        PropertyResult { holds, witness }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub group: String,
    pub order: u64,
    pub factorization: Factorization,
    pub element_orders: ElementOrderProfile,
    pub flags: StructureFlags,
    pub prime_graph: PrimeGraphSummary,
    pub graph: &'static str,
    pub vertices: usize,
    pub edges: usize,
    pub twin_classes: usize,
    pub patterns: FreenessReport,
    pub chordal: PropertyResult,
    pub cograph: PropertyResult,
    pub chain: PropertyResult,
}

/// Builds the group and the selected power graph for `spec`.
pub fn build_analysis_graph(spec: &str, proper: bool) -> Result<(Group, Graph)> {
    let parsed = parse_group_spec(spec)?;
    let group = build_group_with_cap(&parsed, group_cap()).map_err(|e| build_error(spec, e))?;
    let graph = build_power_graph(&group, proper);
    Ok((group, graph))
}

pub fn analyze_group(spec: &str, options: &AnalyzeOptions) -> Result<AnalysisReport> {
    let (group, graph) = build_analysis_graph(spec, options.proper)?;
    Ok(analyze_built(&group, &graph, options))
}

pub fn analyze_built(group: &Group, graph: &Graph, options: &AnalyzeOptions) -> AnalysisReport {
    let flags = compute_structure_flags(group);
    let prime = build_prime_graph(group);
    let primes: Vec<u64> = flags.factorization.primes().collect();
    let detector = Detector::new(graph);
    AnalysisReport {
        group: group.label().to_string(),
        order: group.order() as u64,
        factorization: flags.factorization.clone(),
        element_orders: group.element_order_profile(),
        prime_graph: PrimeGraphSummary {
            edges: prime.edges().into_iter().map(|(u, v)| [primes[u], primes[v]]).collect(),
            null: prime.edge_count() == 0,
            vertices: primes,
        },
        flags,
        graph: if options.proper { "P*(G)" } else { "P(G)" },
        vertices: graph.n(),
        edges: graph.edge_count(),
        twin_classes: detector.reduced().num_classes(),
        patterns: detector.is_free(&options.patterns),
        chordal: is_chordal(graph).into(),
        cograph: detector.is_cograph().into(),
        chain: detector.is_chain_graph().into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn serial() -> HarnessOptions {
        HarnessOptions { parallel: false, ..HarnessOptions::default() }
    }

    #[test]
    fn default_corpus_contents() {
        let c = default_corpus();
        let specs: Vec<&str> = c.groups.iter().map(|e| e.spec.as_str()).collect();
        assert!(c.groups.len() >= 45);
        for s in ["S6", "A7", "C36", "E2^3xC9", "PSL(2,13)", "SD(15,2,14)"] {
            assert!(specs.contains(&s), "{s}");
        }
        for s in PRODUCT_SUBCORPUS {
            assert!(specs.contains(&s), "{s}");
        }
        let mut dedup = specs.clone();
        dedup.sort_unstable();
        dedup.dedup();
        assert_eq!(dedup.len(), specs.len());
    }

    #[test]
    fn corpus_file_parsing() {
        let c = parse_corpus("# groups\nC6\n  S3  # symmetric\n\nSz(8)\nC2 x C3\n").unwrap();
        let specs: Vec<&str> = c.groups.iter().map(|e| e.spec.as_str()).collect();
        assert_eq!(specs, ["C6", "S3", "C2xC3"]);
        assert_eq!(c.sz_parameters, [8]);
        assert!(matches!(parse_corpus("C6\nX9\n"), Err(Error::Build { .. })));
        assert!(parse_corpus("Sz(16)").is_err());
    }

    #[test]
    fn symmetric_case() {
        let corpus = Corpus { groups: ["S2", "S3", "S4", "S5", "S6"].map(|s| CorpusEntry::parsed(s).unwrap()).to_vec(), ..Corpus::default() };
        let r = run_theorem_case("T-SN", &corpus, &serial()).unwrap();
        assert_eq!(r.entries.len(), 5);
        assert_eq!(r.mismatches, 0);
        let s6 = r.entry("S6").unwrap();
        assert_eq!(s6.graph_side, Some(false));
        assert_eq!(s6.witness.as_ref().unwrap().len(), 5);
    }

    #[test]
    fn unknown_theorem() {
        let e = run_theorem_case("T-NOPE", &Corpus::default(), &serial()).unwrap_err();
        assert_eq!(e, Error::UnknownTheorem("T-NOPE".into()));
    }

    #[test]
    fn empty_and_tiny_corpora() {
        let reports = run_all(&Corpus::default(), &serial()).unwrap();
        assert_eq!(reports.len(), 16);
        assert!(reports.iter().all(|r| r.entries.is_empty() && r.mismatches == 0));

        let c2 = parse_corpus("C2").unwrap();
        let reports = run_all(&c2, &serial()).unwrap();
        assert_eq!(reports.len(), 16);
        assert!(reports.iter().all(|r| r.mismatches == 0));
    }

    #[test]
    fn analysis_of_small_groups() {
        let a5 = analyze_group("A5", &AnalyzeOptions::default()).unwrap();
        assert!(a5.flags.is_eppo);
        assert!(a5.prime_graph.null);
        assert!(a5.cograph.holds);
        let p5 = a5.patterns.entries.iter().filter(|e| e.pattern.starts_with("P5")).all(|e| e.free);
        assert!(p5);

        let c1 = analyze_group("C1", &AnalyzeOptions::default()).unwrap();
        assert_eq!(c1.order, 1);
        assert!(c1.patterns.free && c1.chordal.holds && c1.cograph.holds && c1.chain.holds);

        let psl = analyze_group("PSL(2,7)", &AnalyzeOptions::default()).unwrap();
        assert_eq!(psl.order, 168);
        assert!(psl.patterns.entries.iter().filter(|e| e.pattern.starts_with("P5")).all(|e| e.free));
    }
}
