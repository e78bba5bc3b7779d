//! IO companion for the enumeration core: report schemas, output rendering,
//! parallel brute-force drivers, and the named verification checks shared by
//! the `annular verify` subcommand and the acceptance suite.

pub mod verify;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use annular_core::ground::GroundError;
use annular_core::oracle::{branch_cursors, tally_cursor};
use annular_core::{CycleDistribution, GroundSet, MixedFilter};

/// Worker pool sized by ANNULAR_THREADS when set to a positive integer,
/// otherwise by the rayon default.
fn pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(threads) = std::env::var("ANNULAR_THREADS")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
            .filter(|&t| t > 0)
        {
            builder = builder.num_threads(threads);
        }
        builder.build().expect("thread pool")
    })
}

/// Full brute-force cycle distribution, spread over threads by the branch
/// decomposition of the pairing walk.
pub fn parallel_distribution(
    ground: GroundSet,
    filter: MixedFilter,
) -> Result<CycleDistribution, GroundError> {
    let cursors = branch_cursors(ground, filter)?;
    pool().install(|| {
        cursors
            .into_par_iter()
            .map(|mut cursor| tally_cursor(&mut cursor))
            .try_reduce(CycleDistribution::new, |mut acc, dist| {
                acc.merge(&dist);
                Ok(acc)
            })
    })
}

/// One parallel walk over every pairing of the ground set, bucketed by
/// mixed-pair count.
pub fn parallel_by_mixed(
    ground: GroundSet,
) -> Result<BTreeMap<usize, CycleDistribution>, GroundError> {
    let cursors = branch_cursors(ground, MixedFilter::Any)?;
    pool().install(|| {
        cursors
            .into_par_iter()
            .map(|mut cursor| {
                let mut buckets: BTreeMap<usize, CycleDistribution> = BTreeMap::new();
                let counter = &mut FaceTally::new(cursor.ground())?;
                while cursor.advance() {
                    buckets
                        .entry(cursor.mixed_count())
                        .or_default()
                        .record(counter.count(cursor.partners()));
                }
                Ok(buckets)
            })
            .try_reduce(BTreeMap::new, |mut acc, buckets| {
                for (s, dist) in buckets {
                    acc.entry(s).or_default().merge(&dist);
                }
                Ok(acc)
            })
    })
}

/// Cycle counting for μγ⁻¹ reused across a branch walk.
struct FaceTally {
    gamma_inv: Vec<usize>,
    seen: Vec<bool>,
}

impl FaceTally {
    fn new(ground: GroundSet) -> Result<FaceTally, GroundError> {
        let gamma = annular_core::ground::standard_rotation(ground)?;
        let inverse = gamma.inverse();
        Ok(FaceTally {
            gamma_inv: (0..ground.size()).map(|x| inverse.apply(x)).collect(),
            seen: vec![false; ground.size()],
        })
    }

    fn count(&mut self, partner: &[usize]) -> usize {
        self.seen.iter_mut().for_each(|s| *s = false);
        let mut cycles = 0;
        for start in 0..partner.len() {
            if self.seen[start] {
                continue;
            }
            cycles += 1;
            let mut at = start;
            while !self.seen[at] {
                self.seen[at] = true;
                at = partner[self.gamma_inv[at]];
            }
        }
        cycles
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

/// One line of a cycle-count distribution. Counts travel as decimal strings
/// so arbitrary precision survives JSON.
#[derive(Serialize)]
pub struct DistributionRow {
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus: Option<usize>,
    pub count: String,
}

#[derive(Serialize)]
pub struct DistributionReport {
    pub p: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    pub vertices: usize,
    pub edges: usize,
    pub method: String,
    pub rows: Vec<DistributionRow>,
    pub total: String,
}

impl DistributionReport {
    pub fn from_distribution(
        p: usize,
        q: Option<usize>,
        s: Option<usize>,
        vertices: usize,
        edges: usize,
        method: &str,
        dist: &CycleDistribution,
    ) -> DistributionReport {
        let rows = dist
            .iter()
            .map(|(k, count)| DistributionRow {
                k,
                genus: annular_core::series::genus_of(k, edges, vertices).ok(),
                count: count.to_string(),
            })
            .collect();
        DistributionReport {
            p,
            q,
            s,
            vertices,
            edges,
            method: method.to_string(),
            rows,
            total: dist.total().to_string(),
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => pretty_json(self),
            OutputFormat::Csv => {
                let mut lines = vec![String::from("k,genus,count")];
                for row in &self.rows {
                    lines.push(format!(
                        "{},{},{}",
                        row.k,
                        row.genus.map_or(String::from(""), |g| g.to_string()),
                        row.count
                    ));
                }
                lines.join("\n")
            }
            OutputFormat::Table => {
                let mut head = format!("p={}", self.p);
                if let Some(q) = self.q {
                    head.push_str(&format!(" q={q}"));
                }
                if let Some(s) = self.s {
                    head.push_str(&format!(" s={s}"));
                }
                head.push_str(&format!(
                    " vertices={} edges={} method={}",
                    self.vertices, self.edges, self.method
                ));
                let mut lines = vec![head, String::from("k\tgenus\tcount")];
                for row in &self.rows {
                    lines.push(format!(
                        "{}\t{}\t{}",
                        row.k,
                        row.genus.map_or(String::from("-"), |g| g.to_string()),
                        row.count
                    ));
                }
                lines.push(format!("total\t\t{}", self.total));
                lines.join("\n")
            }
        }
    }
}

/// One coefficient of a summed series polynomial.
#[derive(Serialize)]
pub struct CoefficientRow {
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus: Option<usize>,
    pub coefficient: String,
}

#[derive(Serialize)]
pub struct SumReport {
    pub p: usize,
    pub q: usize,
    pub edges: usize,
    pub method: String,
    pub rows: Vec<CoefficientRow>,
    pub total: String,
}

impl SumReport {
    pub fn from_poly(
        p: usize,
        q: usize,
        method: &str,
        poly: &annular_core::MonomialPoly,
    ) -> SumReport {
        let edges = (p + q) / 2;
        let rows = poly
            .iter()
            .map(|(k, c)| CoefficientRow {
                k,
                genus: annular_core::series::genus_of(k, edges, 2).ok(),
                coefficient: c.to_string(),
            })
            .collect();
        let total = poly.evaluate(&num_bigint::BigInt::from(1u8)).to_string();
        SumReport {
            p,
            q,
            edges,
            method: method.to_string(),
            rows,
            total,
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => pretty_json(self),
            OutputFormat::Csv => {
                let mut lines = vec![String::from("k,genus,coefficient")];
                for row in &self.rows {
                    lines.push(format!(
                        "{},{},{}",
                        row.k,
                        row.genus.map_or(String::from(""), |g| g.to_string()),
                        row.coefficient
                    ));
                }
                lines.join("\n")
            }
            OutputFormat::Table => {
                let mut lines = vec![
                    format!(
                        "p={} q={} edges={} method={}",
                        self.p, self.q, self.edges, self.method
                    ),
                    String::from("k\tgenus\tcoefficient"),
                ];
                for row in &self.rows {
                    lines.push(format!(
                        "{}\t{}\t{}",
                        row.k,
                        row.genus.map_or(String::from("-"), |g| g.to_string()),
                        row.coefficient
                    ));
                }
                lines.push(format!("total\t\t{}", self.total));
                lines.join("\n")
            }
        }
    }
}

#[derive(Serialize)]
pub struct MapRow {
    pub genus: usize,
    pub faces: usize,
    pub count: String,
}

#[derive(Serialize)]
pub struct MapsReport {
    pub p: usize,
    pub q: usize,
    pub s: usize,
    pub edges: usize,
    pub rows: Vec<MapRow>,
    pub total: String,
    pub crosschecked: bool,
}

impl MapsReport {
    pub fn new(
        p: usize,
        q: usize,
        s: usize,
        maps: &BTreeMap<usize, BigUint>,
        crosschecked: bool,
    ) -> MapsReport {
        let edges = (p + q) / 2;
        let rows = maps
            .iter()
            .map(|(&genus, count)| MapRow {
                genus,
                faces: edges - 2 * genus,
                count: count.to_string(),
            })
            .collect();
        let total: BigUint = maps.values().sum();
        MapsReport {
            p,
            q,
            s,
            edges,
            rows,
            total: total.to_string(),
            crosschecked,
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => pretty_json(self),
            OutputFormat::Csv => {
                let mut lines = vec![String::from("genus,faces,count")];
                for row in &self.rows {
                    lines.push(format!("{},{},{}", row.genus, row.faces, row.count));
                }
                lines.join("\n")
            }
            OutputFormat::Table => {
                let mut lines = vec![
                    format!(
                        "p={} q={} s={} edges={} crosschecked={}",
                        self.p, self.q, self.s, self.edges, self.crosschecked
                    ),
                    String::from("genus\tfaces\tcount"),
                ];
                for row in &self.rows {
                    lines.push(format!("{}\t{}\t{}", row.genus, row.faces, row.count));
                }
                lines.push(format!("total\t\t{}", self.total));
                lines.join("\n")
            }
        }
    }
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub max_n: usize,
    pub checks: Vec<verify::CheckResult>,
    pub pass: bool,
}

impl VerifyReport {
    pub fn new(suite: &str, max_n: usize, checks: Vec<verify::CheckResult>) -> VerifyReport {
        let pass = checks.iter().all(|c| c.pass);
        VerifyReport {
            suite: suite.to_string(),
            max_n,
            checks,
            pass,
        }
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => pretty_json(self),
            OutputFormat::Csv => {
                let mut lines = vec![String::from("name,pass,params,detail")];
                for c in &self.checks {
                    lines.push(format!(
                        "{},{},{},{}",
                        c.name,
                        c.pass,
                        csv_quote(&c.params),
                        csv_quote(&c.detail)
                    ));
                }
                lines.join("\n")
            }
            OutputFormat::Table => {
                let mut lines = vec![format!("suite={} max_n={}", self.suite, self.max_n)];
                for c in &self.checks {
                    lines.push(format!(
                        "{}\t{} ({}): {}",
                        if c.pass { "PASS" } else { "FAIL" },
                        c.name,
                        c.params,
                        c.detail
                    ));
                }
                lines.push(format!(
                    "result\t{}",
                    if self.pass { "PASS" } else { "FAIL" }
                ));
                lines.join("\n")
            }
        }
    }
}

fn pretty_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialization")
}

fn csv_quote(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use annular_core::series::main_series_monomial;
    use annular_core::SeriesSpec;

    #[test]
    fn parallel_matches_serial() {
        let spec = SeriesSpec::new(4, 2, 2).unwrap();
        let serial = annular_core::oracle::brute_distribution(&spec).unwrap();
        let parallel =
            parallel_distribution(spec.ground(), MixedFilter::Exactly(spec.s())).unwrap();
        assert_eq!(serial, parallel);
        let buckets = parallel_by_mixed(spec.ground()).unwrap();
        assert_eq!(buckets[&2], serial);
    }

    #[test]
    fn distribution_report_renders() {
        let spec = SeriesSpec::new(3, 1, 1).unwrap();
        let dist = main_series_monomial(&spec).to_distribution().unwrap();
        let report = DistributionReport::from_distribution(
            3,
            Some(1),
            Some(1),
            2,
            2,
            "formula",
            &dist,
        );
        let table = report.render(OutputFormat::Table);
        assert!(table.contains("p=3 q=1 s=1"));
        assert!(table.contains("2\t0\t3"));
        let json = report.render(OutputFormat::Json);
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["rows"][0]["count"], "3");
        let csv = report.render(OutputFormat::Csv);
        assert_eq!(csv, "k,genus,count\n2,0,3");
    }
}
