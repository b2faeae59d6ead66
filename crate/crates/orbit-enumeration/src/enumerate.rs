use octuple_algebra::{reduce_to_root, Octuple};
use rayon::prelude::*;

use crate::table::CurvatureTable;
use crate::traverse::{expansion_floor, push_children};
use crate::{EnumerationError, Result};

/// Tuning knobs for [`enumerate_curvatures`].
#[derive(Debug, Clone)]
pub struct OrbitOptions {
    /// Worker threads; `0` uses the process-wide default.
    pub threads: usize,
    /// Upper bound on estimated table memory, in MiB. `None` disables the
    /// check.
    pub mem_budget_mib: Option<u64>,
    /// Keep per-curvature occurrence counters (doubles table memory).
    pub track_multiplicity: bool,
    /// Accepted for interface compatibility and ignored: the canonical-tree
    /// traversal produces every orbit octuple exactly once, so there is no
    /// duplicate horizon to configure.
    pub dedup_depth: Option<u32>,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        Self {
            threads: 0,
            mem_budget_mib: None,
            track_multiplicity: false,
            dedup_depth: None,
        }
    }
}

/// Enumerates every packing curvature at or below `bound`.
///
/// The seed is first reduced to its orbit root, so any member of the orbit
/// yields the same table. The orbit is then walked as a canonical spanning
/// tree (see [`crate::traverse`]): each visited octuple records its four
/// quadruple entries, which over the whole orbit covers all eight
/// curvatures of every octuple, since each partner value `2ω − bᵢ` is a
/// quadruple entry of the neighbouring octuple `Aᵢ·v`. Subtrees whose
/// [`expansion_floor`] exceeds the bound are pruned.
///
/// The walk is deterministic for any thread count: workers accumulate into
/// private tables that merge by bit-union and saturating addition, both
/// commutative and associative, so the result is independent of scheduling.
///
/// # Errors
///
/// [`EnumerationError::InvalidBound`] for non-positive bounds;
/// [`EnumerationError::MemoryBudget`] when the estimated table memory
/// exceeds `opts.mem_budget_mib`; seed-reduction failures propagate (for
/// example mirror-cone octuples with ω < 0).
pub fn enumerate_curvatures(
    seed: &Octuple,
    bound: i64,
    opts: &OrbitOptions,
) -> Result<CurvatureTable> {
    if bound < 1 {
        return Err(EnumerationError::InvalidBound { bound });
    }
    let threads = if opts.threads == 0 {
        rayon::current_num_threads()
    } else {
        opts.threads
    };
    check_budget(bound, opts, threads)?;

    let root = reduce_to_root(seed)?;
    let mut table = CurvatureTable::new(bound, opts.track_multiplicity);
    record_node(&mut table, &root);

    // Grow a frontier breadth-first until there is enough independent work
    // to split, recording every node created along the way.
    let split_target = threads.max(1) * 64;
    let mut frontier = vec![root];
    while !frontier.is_empty() && frontier.len() < split_target {
        let mut next = Vec::new();
        for v in &frontier {
            if expansion_floor(v) <= bound {
                push_children(v, &mut next);
            }
        }
        for child in &next {
            record_node(&mut table, child);
        }
        frontier = next;
    }
    if frontier.is_empty() {
        return Ok(table);
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| EnumerationError::ThreadPool {
            reason: e.to_string(),
        })?;
    let track = opts.track_multiplicity;
    let merged = pool.install(|| {
        frontier
            .par_iter()
            .fold(
                || CurvatureTable::new(bound, track),
                |mut local, start| {
                    accumulate_descendants(start, bound, &mut local);
                    local
                },
            )
            .reduce(|| CurvatureTable::new(bound, track), CurvatureTable::merged)
    });
    table.merge_from(&merged);
    Ok(table)
}

/// Depth-first accumulation of everything strictly below `start` (the
/// frontier node itself was recorded during the breadth-first phase).
fn accumulate_descendants(start: &Octuple, bound: i64, table: &mut CurvatureTable) {
    let mut stack = Vec::with_capacity(64);
    if expansion_floor(start) <= bound {
        push_children(start, &mut stack);
    }
    while let Some(v) = stack.pop() {
        record_node(table, &v);
        if expansion_floor(&v) <= bound {
            push_children(&v, &mut stack);
        }
    }
}

fn record_node(table: &mut CurvatureTable, v: &Octuple) {
    for value in v.quadruple() {
        table.record(value);
    }
}

/// Rejects runs whose tables would overshoot the configured memory budget.
///
/// The estimate covers the shared table plus one worker-local table per
/// thread: a bit word per 64 curvatures, and a `u64` counter per curvature
/// when tracking is on.
fn check_budget(bound: i64, opts: &OrbitOptions, threads: usize) -> Result<()> {
    let Some(budget_mib) = opts.mem_budget_mib else {
        return Ok(());
    };
    let slots = bound as u64 + 1;
    let per_table = slots.div_ceil(64) * 8
        + if opts.track_multiplicity { slots * 8 } else { 0 };
    let required = per_table * (threads as u64 + 1);
    let required_mib = required.div_ceil(1 << 20);
    if required_mib > budget_mib {
        return Err(EnumerationError::MemoryBudget {
            bound,
            required_mib,
            budget_mib,
        });
    }
    Ok(())
}
