use serde::{Deserialize, Serialize};
use std::fmt;

/// A closed integer interval `[lo, hi]` with `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
}

impl Interval {
    /// Returns the interval, or `None` when `hi < lo` (the empty convention).
    pub fn new(lo: i64, hi: i64) -> Option<Self> {
        (lo <= hi).then_some(Interval { lo, hi })
    }

    pub fn contains(&self, n: i64) -> bool {
        self.lo <= n && n <= self.hi
    }

    pub fn len(&self) -> u64 {
        (self.hi - self.lo) as u64 + 1
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// A normalized list of closed integer intervals: sorted, pairwise disjoint,
/// and non-adjacent (consecutive intervals are separated by at least one
/// integer), so membership and iteration have a unique canonical form.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalList {
    intervals: Vec<Interval>,
}

impl IntervalList {
    pub fn empty() -> Self {
        IntervalList::default()
    }

    /// Builds a normalized list from arbitrary `(lo, hi)` pairs.
    /// Pairs with `hi < lo` are dropped; overlapping or adjacent intervals
    /// are merged.
    pub fn from_pairs<I: IntoIterator<Item = (i64, i64)>>(pairs: I) -> Self {
        let mut intervals: Vec<Interval> = pairs
            .into_iter()
            .filter_map(|(lo, hi)| Interval::new(lo, hi))
            .collect();
        intervals.sort();
        let mut merged: Vec<Interval> = Vec::with_capacity(intervals.len());
        for iv in intervals {
            match merged.last_mut() {
                Some(last) if iv.lo <= last.hi.saturating_add(1) => {
                    last.hi = last.hi.max(iv.hi);
                }
                _ => merged.push(iv),
            }
        }
        IntervalList { intervals: merged }
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn contains(&self, n: i64) -> bool {
        self.intervals
            .binary_search_by(|iv| {
                if n < iv.lo {
                    std::cmp::Ordering::Greater
                } else if n > iv.hi {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Equal
                }
            })
            .is_ok()
    }

    /// Interval containing `n`, if any.
    pub fn find(&self, n: i64) -> Option<Interval> {
        self.intervals.iter().copied().find(|iv| iv.contains(n))
    }

    /// Iterates every member in increasing order.
    pub fn iter_members(&self) -> impl Iterator<Item = i64> + '_ {
        self.intervals.iter().flat_map(|iv| iv.lo..=iv.hi)
    }

    /// Total number of integers covered.
    pub fn member_count(&self) -> u64 {
        self.intervals.iter().map(Interval::len).sum()
    }
}

impl fmt::Display for IntervalList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, iv) in self.intervals.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{iv}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_pairs_are_dropped() {
        let l = IntervalList::from_pairs([(5, 3), (10, 9)]);
        assert!(l.is_empty());
        assert_eq!(l.to_string(), "");
    }

    #[test]
    fn overlapping_and_adjacent_intervals_merge() {
        let l = IntervalList::from_pairs([(4, 6), (1, 2), (3, 3), (10, 12)]);
        assert_eq!(
            l.intervals(),
            &[Interval { lo: 1, hi: 6 }, Interval { lo: 10, hi: 12 }]
        );
        assert_eq!(l.to_string(), "[1,6] [10,12]");
    }

    #[test]
    fn membership_matches_linear_scan() {
        let l = IntervalList::from_pairs([(-3, -1), (2, 2), (7, 11)]);
        for n in -6..15 {
            let linear = l.intervals().iter().any(|iv| iv.contains(n));
            assert_eq!(l.contains(n), linear, "n = {n}");
        }
        assert_eq!(l.member_count(), 3 + 1 + 5);
        assert_eq!(
            l.iter_members().collect::<Vec<_>>(),
            vec![-3, -2, -1, 2, 7, 8, 9, 10, 11]
        );
    }

    #[test]
    fn find_returns_covering_interval() {
        let l = IntervalList::from_pairs([(1, 4), (7, 7)]);
        assert_eq!(l.find(3), Some(Interval { lo: 1, hi: 4 }));
        assert_eq!(l.find(7), Some(Interval { lo: 7, hi: 7 }));
        assert_eq!(l.find(5), None);
    }
}
