use crate::error::{Error, Result};
use crate::quantity::Time;

/// Inclusive range of years `[first, last]`. Intervals live in `[first, last + 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TimeHorizon {
    first: Time,
    last: Time,
}

impl TimeHorizon {
    pub fn new(first: Time, last: Time) -> Result<Self> {
        if first > last {
            return Err(Error::InvalidHorizon { first, last });
        }
        Ok(TimeHorizon { first, last })
    }

    pub fn first(&self) -> Time {
        self.first
    }

    pub fn last(&self) -> Time {
        self.last
    }

    /// Exclusive upper bound, `last + 1`.
    pub fn end(&self) -> Time {
        self.last + 1
    }

    pub fn contains(&self, t: Time) -> bool {
        self.first <= t && t <= self.last
    }

    /// Number of instants; never zero.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        (self.last - self.first + 1) as usize
    }
}
