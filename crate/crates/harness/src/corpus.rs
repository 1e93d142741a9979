//! Graph corpora for verification sweeps and `generate`.

use std::path::PathBuf;

use anyhow::{bail, ensure, Context};
use lmsg_core::canon::{all_graphs, connected_graphs, trees};
use lmsg_core::classifiers::{
    is_bipartite, is_koenig_egervary, is_triangle_free, is_very_well_covered,
};
use lmsg_core::generators::{complete, corona, corona_k1, cycle, fixture, path, FIXTURE_NAMES};
use lmsg_core::{io, Graph, MAX_VERTICES};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Draw budget per requested graph for filtered random sources.
const ATTEMPTS_PER_GRAPH: usize = 20_000;

#[derive(Clone, Debug, PartialEq)]
pub enum Source {
    /// Connected graphs up to isomorphism, `min_n..=max_n` vertices.
    Connected { min_n: usize, max_n: usize },
    /// All graphs up to isomorphism.
    AllGraphs { min_n: usize, max_n: usize },
    Trees { min_n: usize, max_n: usize },
    /// `G(n, p)` samples.
    Random { count: usize, n: usize, p: f64, seed: u64 },
    /// Very well-covered samples at `n` vertices: a planted perfect matching
    /// plus random edges, kept when the result is very well-covered.
    RandomVwc { count: usize, n: usize, seed: u64 },
    /// Every corona `X ∘ {H_i}` with `|X| ≤ max_base` and `|H_i| ≤ max_part`,
    /// all graphs taken up to isomorphism.
    Coronas { max_base: usize, max_part: usize },
    /// `F_k ∘ K1` for `k` in `1..=max_k`.
    CoronaK1 { family: Family, max_k: usize },
    Fixtures(Vec<String>),
    File(PathBuf),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
}

impl Family {
    fn build(self, k: usize) -> lmsg_core::Result<Graph> {
        match self {
            Family::Path => path(k),
            Family::Cycle => cycle(k),
            Family::Complete => complete(k),
        }
    }

    fn min(self) -> usize {
        match self {
            Family::Cycle => 3,
            _ => 1,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Family::Path => "P",
            Family::Cycle => "C",
            Family::Complete => "K",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Filter {
    VeryWellCovered,
    Bipartite,
    TriangleFree,
    KoenigEgervary,
    Connected,
}

impl Filter {
    pub fn keeps(self, g: &Graph) -> bool {
        match self {
            Filter::VeryWellCovered => is_very_well_covered(g),
            Filter::Bipartite => is_bipartite(g),
            Filter::TriangleFree => is_triangle_free(g),
            Filter::KoenigEgervary => is_koenig_egervary(g),
            Filter::Connected => g.is_connected(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct CorpusSpec {
    pub source: Source,
    pub filters: Vec<Filter>,
}

impl CorpusSpec {
    pub fn new(source: Source) -> Self {
        CorpusSpec {
            source,
            filters: Vec::new(),
        }
    }

    #[must_use]
    pub fn filter(mut self, f: Filter) -> Self {
        self.filters.push(f);
        self
    }

    /// Short human-readable description, stable across runs.
    pub fn describe(&self) -> String {
        let base = match &self.source {
            Source::Connected { min_n, max_n } => format!("connected n={min_n}..{max_n}"),
            Source::AllGraphs { min_n, max_n } => format!("all graphs n={min_n}..{max_n}"),
            Source::Trees { min_n, max_n } => format!("trees n={min_n}..{max_n}"),
            Source::Random { count, n, p, seed } => {
                format!("random count={count} n={n} p={p} seed={seed}")
            }
            Source::RandomVwc { count, n, seed } => {
                format!("random very well-covered count={count} n={n} seed={seed}")
            }
            Source::Coronas { max_base, max_part } => {
                format!("coronas |X|<={max_base} |H_i|<={max_part}")
            }
            Source::CoronaK1 { family, max_k } => {
                format!("{}_k o K1 k<={max_k}", family.name())
            }
            Source::Fixtures(names) => format!("fixtures {}", names.join(",")),
            Source::File(p) => format!("file {}", p.display()),
        };
        if self.filters.is_empty() {
            base
        } else {
            let names: Vec<String> = self.filters.iter().map(|f| format!("{f:?}")).collect();
            format!("{base} [{}]", names.join(","))
        }
    }

    fn validate(&self) -> anyhow::Result<()> {
        let check_n = |n: usize| {
            ensure!(n <= MAX_VERTICES, "n = {n} exceeds capacity {MAX_VERTICES}");
            Ok(())
        };
        match &self.source {
            Source::Connected { max_n, .. }
            | Source::AllGraphs { max_n, .. }
            | Source::Trees { max_n, .. } => {
                ensure!(*max_n <= 10, "exhaustive generation is limited to n <= 10");
            }
            Source::Random { n, p, .. } => {
                check_n(*n)?;
                ensure!((0.0..=1.0).contains(p), "edge probability {p} outside [0, 1]");
            }
            Source::RandomVwc { n, .. } => {
                check_n(*n)?;
                ensure!(*n % 2 == 0 && *n > 0, "very well-covered graphs need even n > 0");
            }
            Source::Coronas { max_base, max_part } => {
                check_n(max_base * (1 + max_part))?;
            }
            Source::CoronaK1 { max_k, .. } => check_n(2 * max_k)?,
            Source::Fixtures(_) | Source::File(_) => {}
        }
        Ok(())
    }

    /// Materializes the corpus in its canonical order.
    pub fn build(&self) -> anyhow::Result<Vec<Item>> {
        self.validate()?;
        let items = match &self.source {
            Source::Connected { min_n, max_n } => numbered("connected", *min_n, *max_n, connected_graphs),
            Source::AllGraphs { min_n, max_n } => numbered("graph", *min_n, *max_n, all_graphs),
            Source::Trees { min_n, max_n } => numbered("tree", (*min_n).max(1), *max_n, trees),
            Source::Random { count, n, p, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                (0..*count)
                    .map(|i| Item::plain(format!("random-{n}-{i}"), gnp(&mut rng, *n, *p)))
                    .collect()
            }
            Source::RandomVwc { count, n, seed } => random_vwc(*count, *n, *seed)?,
            Source::Coronas { max_base, max_part } => small_coronas(*max_base, *max_part)?,
            Source::CoronaK1 { family, max_k } => (family.min()..=*max_k)
                .map(|k| {
                    let g = corona_k1(&family.build(k)?)?;
                    Ok(Item::plain(format!("{}{k}oK1", family.name()), g))
                })
                .collect::<anyhow::Result<_>>()?,
            Source::Fixtures(names) => names
                .iter()
                .map(|name| Ok(Item::plain(name.clone(), fixture(name)?)))
                .collect::<anyhow::Result<_>>()?,
            Source::File(path) => {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                let graphs = io::parse_many(&text)
                    .with_context(|| format!("parsing {}", path.display()))?;
                graphs
                    .into_iter()
                    .enumerate()
                    .map(|(i, g)| Item::plain(format!("{}#{i}", path.display()), g))
                    .collect()
            }
        };
        Ok(items
            .into_iter()
            .filter(|item| self.filters.iter().all(|f| f.keeps(&item.graph)))
            .collect())
    }
}

/// One corpus member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Item {
    pub name: String,
    pub graph: Graph,
    /// The attached graphs when the item is a corona.
    pub corona_parts: Option<Vec<Graph>>,
}

impl Item {
    pub fn plain(name: String, graph: Graph) -> Self {
        Item {
            name,
            graph,
            corona_parts: None,
        }
    }
}

fn numbered(kind: &str, min_n: usize, max_n: usize, gen: fn(usize) -> Vec<Graph>) -> Vec<Item> {
    (min_n..=max_n)
        .flat_map(|n| {
            gen(n)
                .into_iter()
                .enumerate()
                .map(move |(i, g)| Item::plain(format!("{kind}-{n}-{i}"), g))
        })
        .collect()
}

fn gnp(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("n validated")
}

fn random_vwc(count: usize, n: usize, seed: u64) -> anyhow::Result<Vec<Item>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        if attempts == count.max(1) * ATTEMPTS_PER_GRAPH {
            bail!("only {} of {count} very well-covered graphs after {attempts} draws", out.len());
        }
        attempts += 1;
        let g = planted_matching_graph(&mut rng, n);
        if is_very_well_covered(&g) {
            out.push(Item::plain(format!("random-vwc-{n}-{}", out.len()), g));
        }
    }
    Ok(out)
}

/// Pairs `(2i, 2i+1)` form a perfect matching; between two pairs one of a
/// few connection patterns is chosen, then vertices are shuffled.
fn planted_matching_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let pairs = n / 2;
    let density: f64 = rng.gen_range(0.15..0.6);
    let mut edges: Vec<(usize, usize)> = (0..pairs).map(|i| (2 * i, 2 * i + 1)).collect();
    for i in 0..pairs {
        for j in i + 1..pairs {
            if !rng.gen_bool(density) {
                continue;
            }
            let (a, b) = (2 * i + rng.gen_range(0..2), 2 * j + rng.gen_range(0..2));
            edges.push((a, b));
            if rng.gen_bool(0.2) {
                edges.push((a ^ 1, b ^ 1));
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let edges: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (perm[a], perm[b])).collect();
    Graph::from_edges(n, edges).expect("planted edges are simple")
}

fn small_coronas(max_base: usize, max_part: usize) -> anyhow::Result<Vec<Item>> {
    let parts: Vec<Graph> = (1..=max_part).flat_map(all_graphs).collect();
    let mut out = Vec::new();
    for k in 1..=max_base {
        for (bi, base) in all_graphs(k).into_iter().enumerate() {
            let mut choice = vec![0usize; k];
            loop {
                let hs: Vec<Graph> = choice.iter().map(|&c| parts[c].clone()).collect();
                let g = corona(&base, &hs)?;
                let tag: Vec<String> = choice.iter().map(usize::to_string).collect();
                out.push(Item {
                    name: format!("corona-{k}-{bi}-[{}]", tag.join(",")),
                    graph: g,
                    corona_parts: Some(hs),
                });
                // odometer over part indices
                let mut pos = k;
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    choice[pos] += 1;
                    if choice[pos] < parts.len() {
                        break;
                    }
                    choice[pos] = 0;
                }
                if choice.iter().all(|&c| c == 0) {
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// Every fixture name, in the order of [`FIXTURE_NAMES`].
pub fn all_fixtures() -> Vec<String> {
    FIXTURE_NAMES.iter().map(|s| s.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_counts() {
        let n = |min_n, max_n| {
            CorpusSpec::new(Source::Connected { min_n, max_n })
                .build()
                .unwrap()
                .len()
        };
        assert_eq!(n(1, 5), 31);
        assert_eq!(n(2, 5), 30);
    }

    #[test]
    fn corona_count() {
        let items = CorpusSpec::new(Source::Coronas {
            max_base: 3,
            max_part: 3,
        })
        .build()
        .unwrap();
        // 1*7 + 2*7^2 + 4*7^3
        assert_eq!(items.len(), 1477);
        assert!(items.iter().all(|i| i.corona_parts.is_some()));
    }

    #[test]
    fn path_coronas_are_vwc() {
        let items = CorpusSpec::new(Source::CoronaK1 {
            family: Family::Path,
            max_k: 6,
        })
        .build()
        .unwrap();
        assert_eq!(items.len(), 6);
        assert!(items.iter().all(|i| is_very_well_covered(&i.graph)));
    }

    #[test]
    fn random_is_seeded() {
        let spec = CorpusSpec::new(Source::Random {
            count: 10,
            n: 8,
            p: 0.3,
            seed: 42,
        });
        assert_eq!(spec.build().unwrap(), spec.build().unwrap());
        let other = CorpusSpec::new(Source::Random {
            count: 10,
            n: 8,
            p: 0.3,
            seed: 43,
        });
        assert_ne!(spec.build().unwrap(), other.build().unwrap());
    }

    #[test]
    fn random_vwc_members_are_vwc() {
        let items = CorpusSpec::new(Source::RandomVwc {
            count: 20,
            n: 10,
            seed: 7,
        })
        .build()
        .unwrap();
        assert_eq!(items.len(), 20);
        assert!(items.iter().all(|i| is_very_well_covered(&i.graph)));
    }

    #[test]
    fn invalid_specs() {
        assert!(CorpusSpec::new(Source::Random {
            count: 1,
            n: 17,
            p: 0.5,
            seed: 0
        })
        .build()
        .is_err());
        assert!(CorpusSpec::new(Source::Random {
            count: 1,
            n: 5,
            p: 1.5,
            seed: 0
        })
        .build()
        .is_err());
        assert!(CorpusSpec::new(Source::Fixtures(vec!["nope".into()]))
            .build()
            .is_err());
    }
}
