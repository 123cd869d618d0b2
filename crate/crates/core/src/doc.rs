//! JSON documents for the command line: weight distributions and gap
//! reports. Counts travel as decimal strings since they routinely exceed
//! 64 bits.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::analysis::{GapReport, NonzeroDistribution};
use crate::code::WeightDistribution;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct DistributionDocument {
    pub q: u32,
    pub n: usize,
    pub k: usize,
    pub counts: Vec<String>,
}

impl DistributionDocument {
    pub fn from_distribution(wd: &WeightDistribution) -> Self {
        DistributionDocument {
            q: wd.q,
            n: wd.n,
            k: wd.k,
            counts: wd.counts.iter().map(BigInt::to_string).collect(),
        }
    }

    pub fn to_distribution(&self) -> Result<WeightDistribution, String> {
        if self.counts.len() != self.n + 1 {
            return Err(format!(
                "expected {} counts for n = {}, got {}",
                self.n + 1,
                self.n,
                self.counts.len()
            ));
        }
        let counts = self
            .counts
            .iter()
            .map(|s| s.parse().map_err(|_| format!("bad count {s:?}")))
            .collect::<Result<_, _>>()?;
        Ok(WeightDistribution::new(self.q, self.n, self.k, counts))
    }
}

/// One log-concavity violation with its neighborhood, all decimal strings.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Witness {
    pub index: usize,
    pub prev: String,
    pub value: String,
    pub next: String,
    /// value^2 - prev * next, negative at a violation.
    pub deficit: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportDocument {
    pub subject: String,
    pub gap_count: usize,
    pub violations: Vec<usize>,
    pub log_concave: bool,
    pub unimodal: bool,
    pub peak_index: usize,
    pub witnesses: Vec<Witness>,
}

impl ReportDocument {
    pub fn from_report(subject: String, nzd: &NonzeroDistribution, report: &GapReport) -> Self {
        let witnesses = report
            .violations
            .iter()
            .map(|v| Witness {
                index: v.index,
                prev: nzd.counts[v.index - 1].to_string(),
                value: nzd.counts[v.index].to_string(),
                next: nzd.counts[v.index + 1].to_string(),
                deficit: v.deficit.to_string(),
            })
            .collect();
        ReportDocument {
            subject,
            gap_count: report.gap_count,
            violations: report.violations.iter().map(|v| v.index).collect(),
            log_concave: report.log_concave,
            unimodal: report.unimodal,
            peak_index: report.peak_index,
            witnesses,
        }
    }
}
