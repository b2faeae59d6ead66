use std::collections::BTreeMap;
use std::io::{self, Write};

/// Magic header prefix of the binary bitmap export.
pub const BITMAP_MAGIC: &[u8; 8] = b"OCT8PACK";

/// Membership (and optional occurrence counts) of packing curvatures up to a
/// bound.
///
/// Curvatures `0..=bound` live in a bit array; zero (planes) additionally
/// keeps an exact occurrence counter, and negative curvatures (the bounding
/// sphere — a packing has at most one) are recorded exactly in a side map,
/// unconstrained by the bound.
///
/// When occurrence tracking is enabled, the counter for a curvature is the
/// number of quadruple slots carrying that value among the octuples the
/// pruned traversal visits. It is a traversal-load diagnostic — the same
/// sphere belongs to many octuples, so this is neither a sphere count nor
/// independent of the bound. Counters saturate at `u64::MAX`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurvatureTable {
    bound: i64,
    words: Vec<u64>,
    multiplicity: Option<Vec<u64>>,
    zero_count: u64,
    negatives: BTreeMap<i64, u64>,
}

impl CurvatureTable {
    /// Creates an empty table over `0..=bound`.
    ///
    /// # Panics
    ///
    /// Panics if `bound < 1`; entry points validate bounds before
    /// construction.
    pub fn new(bound: i64, track_multiplicity: bool) -> Self {
        assert!(bound >= 1, "table bound must be positive");
        let slots = bound as usize + 1;
        Self {
            bound,
            words: vec![0; slots.div_ceil(64)],
            multiplicity: track_multiplicity.then(|| vec![0; slots]),
            zero_count: 0,
            negatives: BTreeMap::new(),
        }
    }

    /// The inclusive upper bound of the membership range.
    pub fn bound(&self) -> i64 {
        self.bound
    }

    /// Whether occurrence counters are kept.
    pub fn tracks_multiplicity(&self) -> bool {
        self.multiplicity.is_some()
    }

    /// Records one occurrence of `value`. Values above the bound are
    /// ignored; negative values are always kept.
    pub fn record(&mut self, value: i64) {
        if value < 0 {
            let slot = self.negatives.entry(value).or_insert(0);
            *slot = slot.saturating_add(1);
            return;
        }
        if value > self.bound {
            return;
        }
        let k = value as usize;
        self.words[k / 64] |= 1u64 << (k % 64);
        if value == 0 {
            self.zero_count = self.zero_count.saturating_add(1);
        }
        if let Some(counts) = &mut self.multiplicity {
            counts[k] = counts[k].saturating_add(1);
        }
    }

    /// Whether `value` has been recorded (always `false` above the bound).
    pub fn contains(&self, value: i64) -> bool {
        if value < 0 {
            return self.negatives.contains_key(&value);
        }
        if value > self.bound {
            return false;
        }
        let k = value as usize;
        self.words[k / 64] & (1u64 << (k % 64)) != 0
    }

    /// Occurrence count for `value`: exact for negatives and zero, `None`
    /// for positive values when tracking is disabled or out of range.
    pub fn multiplicity_of(&self, value: i64) -> Option<u64> {
        if value < 0 {
            return Some(self.negatives.get(&value).copied().unwrap_or(0));
        }
        if value == 0 {
            return Some(self.zero_count);
        }
        if value > self.bound {
            return None;
        }
        self.multiplicity.as_ref().map(|counts| counts[value as usize])
    }

    /// Number of occurrences of curvature zero (plane slots).
    pub fn zero_count(&self) -> u64 {
        self.zero_count
    }

    /// Recorded negative curvatures with their occurrence counts.
    pub fn negatives(&self) -> &BTreeMap<i64, u64> {
        &self.negatives
    }

    /// All recorded curvature values in ascending order.
    pub fn present_curvatures(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self.negatives.keys().copied().collect();
        out.extend((0..=self.bound).filter(|&v| self.contains(v)));
        out
    }

    /// Number of distinct recorded values.
    pub fn count_present(&self) -> usize {
        self.negatives.len()
            + self
                .words
                .iter()
                .map(|w| w.count_ones() as usize)
                .sum::<usize>()
    }

    /// Folds another table of the same shape into this one (bit union,
    /// saturating counter addition). Union and saturating addition of
    /// nonnegative counters are commutative and associative, so any merge
    /// order yields the same table.
    ///
    /// # Panics
    ///
    /// Panics if the bounds or tracking modes differ.
    pub fn merge_from(&mut self, other: &Self) {
        assert_eq!(self.bound, other.bound, "merging tables of unequal bound");
        assert_eq!(
            self.multiplicity.is_some(),
            other.multiplicity.is_some(),
            "merging tables of unequal tracking mode"
        );
        for (dst, src) in self.words.iter_mut().zip(&other.words) {
            *dst |= src;
        }
        if let (Some(dst), Some(src)) = (&mut self.multiplicity, &other.multiplicity) {
            for (d, s) in dst.iter_mut().zip(src) {
                *d = d.saturating_add(*s);
            }
        }
        self.zero_count = self.zero_count.saturating_add(other.zero_count);
        for (&value, &count) in &other.negatives {
            let slot = self.negatives.entry(value).or_insert(0);
            *slot = slot.saturating_add(count);
        }
    }

    /// By-value form of [`merge_from`](Self::merge_from) for reduction
    /// pipelines.
    pub fn merged(mut self, other: Self) -> Self {
        self.merge_from(&other);
        self
    }

    /// Writes `curvature,present,multiplicity` rows: negatives first, then
    /// every value `0..=bound`. The multiplicity column is empty when
    /// tracking is off (negative and zero counts are suppressed too, keeping
    /// the column uniform).
    pub fn write_csv<W: Write>(&self, sink: W) -> csv::Result<()> {
        let mut writer = csv::Writer::from_writer(sink);
        writer.write_record(["curvature", "present", "multiplicity"])?;
        let tracked = self.multiplicity.is_some();
        let mult_field = |count: u64| {
            if tracked {
                count.to_string()
            } else {
                String::new()
            }
        };
        for (&value, &count) in &self.negatives {
            writer.write_record([value.to_string(), "1".into(), mult_field(count)])?;
        }
        for value in 0..=self.bound {
            let present = if self.contains(value) { "1" } else { "0" };
            let count = self.multiplicity_of(value).unwrap_or(0);
            writer.write_record([value.to_string(), present.into(), mult_field(count)])?;
        }
        writer.flush()?;
        Ok(())
    }

    /// Writes the binary bitmap: `"OCT8PACK"`, the bound as a little-endian
    /// `u64`, then `⌈(bound+1)/8⌉` bytes where bit `k` (LSB-first within
    /// each byte) reports curvature `k`. Negative curvatures are not
    /// representable here; use the CSV export for those.
    pub fn write_bitmap<W: Write>(&self, mut sink: W) -> io::Result<()> {
        sink.write_all(BITMAP_MAGIC)?;
        sink.write_all(&(self.bound as u64).to_le_bytes())?;
        let n_bytes = (self.bound as usize + 1).div_ceil(8);
        let bytes: Vec<u8> = self
            .words
            .iter()
            .flat_map(|w| w.to_le_bytes())
            .take(n_bytes)
            .collect();
        sink.write_all(&bytes)
    }
}
