//! Replays a weight-change event stream against a plan set.
//!
//! Each event is answered from the existing plan before anything else
//! happens; that answer's latency is what the simulator reports as the
//! selection latency. Plan rebuilds and (optionally) a from-scratch MST
//! recompute are timed separately.

use std::hint::black_box;
use std::time::Instant;

use thiserror::Error;

use crate::ecst::{constrained_mst_kruskal, Constraints, OptimizationSense};
use crate::graph::WeaklyDynamicGraph;
use crate::io::events::Event;
use crate::precompute::{select_tree, PlanError, PlanSet};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SimulateError {
    #[error("event on line {line}: {source}")]
    Event { line: usize, source: PlanError },
    #[error(transparent)]
    Plan(#[from] PlanError),
}

/// Nanosecond latency summary.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct LatencyStats {
    pub count: usize,
    pub mean: f64,
    pub median: f64,
    pub max: f64,
}

impl LatencyStats {
    pub fn from_samples(samples: &[u64]) -> Self {
        if samples.is_empty() {
            return Self::default();
        }
        let mut sorted = samples.to_vec();
        sorted.sort_unstable();
        let count = sorted.len();
        let median = if count % 2 == 1 {
            sorted[count / 2] as f64
        } else {
            (sorted[count / 2 - 1] + sorted[count / 2]) as f64 / 2.0
        };
        Self {
            count,
            mean: sorted.iter().sum::<u64>() as f64 / count as f64,
            median,
            max: *sorted.last().unwrap() as f64,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimulationReport {
    pub events: usize,
    /// Events whose new value lies on the other side of the edge's critical
    /// value than its previous value.
    pub switches: usize,
    pub selection_ns: LatencyStats,
    pub rebuild_ns: LatencyStats,
    pub naive_ns: Option<LatencyStats>,
}

impl SimulationReport {
    /// Mean naive recompute latency over mean selection latency.
    pub fn speedup(&self) -> Option<f64> {
        let naive = self.naive_ns?;
        (self.selection_ns.mean > 0.0).then(|| naive.mean / self.selection_ns.mean)
    }

    pub fn median_speedup(&self) -> Option<f64> {
        let naive = self.naive_ns?;
        (self.selection_ns.median > 0.0).then(|| naive.median / self.selection_ns.median)
    }
}

impl std::fmt::Display for SimulationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let line = |f: &mut std::fmt::Formatter<'_>, name: &str, s: &LatencyStats| {
            writeln!(f, "{name}: mean={:.1} median={:.1} max={:.1}", s.mean, s.median, s.max)
        };
        writeln!(f, "events: {}", self.events)?;
        writeln!(f, "switches: {}", self.switches)?;
        line(f, "selection_ns", &self.selection_ns)?;
        line(f, "rebuild_ns", &self.rebuild_ns)?;
        if let Some(naive) = &self.naive_ns {
            line(f, "naive_ns", naive)?;
            match (self.speedup(), self.median_speedup()) {
                (Some(mean), Some(median)) => {
                    writeln!(f, "speedup: mean={mean:.1}x median={median:.1}x")?
                }
                _ => writeln!(f, "speedup: n/a")?,
            }
        }
        Ok(())
    }
}

fn naive_recompute(g: &WeaklyDynamicGraph) {
    black_box(constrained_mst_kruskal(black_box(g), &Constraints::none(), OptimizationSense::Minimize))
        .expect("graph is connected");
}

/// Replays `events` in order, mutating `g` and returning the final plan set
/// alongside the report.
pub fn simulate(
    mut plans: PlanSet,
    g: &mut WeaklyDynamicGraph,
    events: &[Event],
    compare_naive: bool,
) -> Result<(SimulationReport, PlanSet), SimulateError> {
    if plans.snapshot() != &g.unstable_values() {
        return Err(PlanError::StaleSnapshot.into());
    }
    let mut selection = Vec::with_capacity(events.len());
    let mut rebuild = Vec::with_capacity(events.len());
    let mut naive = Vec::new();
    let mut switches = 0;

    // Warm-up, not recorded.
    if let Some(first) = events.first() {
        if let Ok(plan) = plans.plan(first.edge) {
            black_box(select_tree(black_box(plan), black_box(first.x)));
        }
        if compare_naive {
            naive_recompute(g);
        }
    }

    for ev in events {
        let at_line = |source: PlanError| SimulateError::Event { line: ev.line, source };
        let plan = plans.plan(ev.edge).map_err(at_line)?;
        let previous = select_tree(plan, g.weight(ev.edge)).chosen;

        let start = Instant::now();
        let chosen = black_box(select_tree(black_box(plan), black_box(ev.x))).chosen;
        selection.push(start.elapsed().as_nanos() as u64);

        if chosen != previous {
            switches += 1;
        }
        g.set_unstable_weight(ev.edge, ev.x).map_err(|e| at_line(e.into()))?;

        if compare_naive {
            let start = Instant::now();
            naive_recompute(g);
            naive.push(start.elapsed().as_nanos() as u64);
        }

        let start = Instant::now();
        plans = plans.rebuild(g);
        rebuild.push(start.elapsed().as_nanos() as u64);
    }

    let report = SimulationReport {
        events: events.len(),
        switches,
        selection_ns: LatencyStats::from_samples(&selection),
        rebuild_ns: LatencyStats::from_samples(&rebuild),
        naive_ns: compare_naive.then(|| LatencyStats::from_samples(&naive)),
    };
    Ok((report, plans))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::io::events::parse_events;
    use crate::io::format::parse_graph;
    use crate::precompute::precompute_all;

    #[test]
    fn stats() {
        let s = LatencyStats::from_samples(&[5, 1, 3, 100]);
        assert_eq!(s, LatencyStats { count: 4, mean: 27.25, median: 4.0, max: 100.0 });
        assert_eq!(LatencyStats::from_samples(&[]).count, 0);
    }

    #[test]
    fn triangle_switches() {
        let mut g = parse_graph("p wdg 3 3\ne 0 1 1\ne 1 2 2\nu 0 2 1\n").unwrap();
        let ps = precompute_all(&g);
        // cv = 2: 1 -> 5 crosses, 5 -> 6 does not, 6 -> 0 crosses.
        let events = parse_events("1 2 5\n2 2 6\n3 2 0\n").unwrap();
        let (report, plans) = simulate(ps.clone(), &mut g, &events, true).unwrap();
        assert_eq!(report.events, 3);
        assert_eq!(report.switches, 2);
        assert_eq!(report.naive_ns.unwrap().count, 3);
        assert_eq!(g.weight(2), 0.0);
        assert_eq!(plans.plans(), ps.plans());
    }

    #[test]
    fn empty_stream() {
        let mut g = parse_graph("p wdg 3 3\ne 0 1 1\ne 1 2 2\nu 0 2 1\n").unwrap();
        let (report, _) = simulate(precompute_all(&g), &mut g, &[], false).unwrap();
        assert_eq!((report.events, report.switches), (0, 0));
        assert!(report.naive_ns.is_none());
    }

    #[test]
    fn stable_edge_event_reports_line() {
        let mut g = parse_graph("p wdg 3 3\ne 0 1 1\ne 1 2 2\nu 0 2 1\n").unwrap();
        let events = parse_events("1 2 5\n\n2 0 6\n").unwrap();
        let err = simulate(precompute_all(&g), &mut g, &events, false).unwrap_err();
        assert_eq!(err, SimulateError::Event { line: 3, source: PlanError::NotUnstable(0) });
    }
}
