use crate::error::{Error, Result};

/// Effective SINR of every user (rows) on every beam (columns).
#[derive(Debug, Clone, PartialEq)]
pub struct SinrTable {
    users: usize,
    beams: usize,
    gamma: Vec<f64>,
}

impl SinrTable {
    /// `gamma` is row-major, `users x beams`; entries must be finite and >= 0.
    pub fn new(users: usize, beams: usize, gamma: Vec<f64>) -> Result<Self> {
        if users == 0 || beams == 0 {
            return Err(Error::DimensionMismatch("SINR table must be non-empty".into()));
        }
        if gamma.len() != users * beams {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for {users}x{beams}, got {}",
                users * beams,
                gamma.len()
            )));
        }
        if let Some(bad) = gamma.iter().find(|g| !(g.is_finite() && **g >= 0.0)) {
            return Err(Error::Domain {
                op: "SinrTable::new",
                detail: format!("SINR entries must be finite and nonnegative, got {bad}"),
            });
        }
        Ok(Self { users, beams, gamma })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let beams = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != beams) {
            return Err(Error::DimensionMismatch("ragged SINR rows".into()));
        }
        Self::new(rows.len(), beams, rows.concat())
    }

    pub fn users(&self) -> usize {
        self.users
    }

    pub fn beams(&self) -> usize {
        self.beams
    }

    pub fn get(&self, user: usize, beam: usize) -> f64 {
        self.gamma[user * self.beams + beam]
    }

    pub fn row(&self, user: usize) -> &[f64] {
        &self.gamma[user * self.beams..(user + 1) * self.beams]
    }
}

/// Outcome of one slot of per-beam max-SINR scheduling.
#[derive(Debug, Clone, PartialEq)]
pub struct ScheduleResult {
    /// Zero-based index of the user served on each beam.
    pub winner: Vec<usize>,
    /// Largest SINR on each beam.
    pub gamma_star: Vec<f64>,
    /// `sum_m log2(1 + gamma_star[m])` in bits/s/Hz.
    pub sum_rate: f64,
}

/// Running per-beam argmax, fed one user at a time.
///
/// A later user only replaces the incumbent on a strictly larger SINR, so
/// ties go to the lowest user index. A user may win several beams.
#[derive(Debug, Clone)]
pub struct BeamScheduler {
    best: Vec<f64>,
    winner: Vec<usize>,
}

impl BeamScheduler {
    pub fn new(beams: usize) -> Self {
        Self {
            best: vec![f64::NEG_INFINITY; beams],
            winner: vec![0; beams],
        }
    }

    pub fn offer(&mut self, user: usize, sinrs: &[f64]) {
        debug_assert_eq!(sinrs.len(), self.best.len());
        for ((best, winner), &g) in self.best.iter_mut().zip(&mut self.winner).zip(sinrs) {
            if g > *best {
                *best = g;
                *winner = user;
            }
        }
    }

    pub fn offer_beam(&mut self, user: usize, beam: usize, sinr: f64) {
        if sinr > self.best[beam] {
            self.best[beam] = sinr;
            self.winner[beam] = user;
        }
    }

    pub fn sum_rate(&self) -> f64 {
        sum_rate(&self.best)
    }

    pub fn finish(self) -> ScheduleResult {
        let sum_rate = sum_rate(&self.best);
        ScheduleResult {
            winner: self.winner,
            gamma_star: self.best,
            sum_rate,
        }
    }
}

fn sum_rate(gamma_star: &[f64]) -> f64 {
    gamma_star.iter().map(|g| g.ln_1p()).sum::<f64>() / std::f64::consts::LN_2
}

/// Gives each beam to the user with the largest effective SINR on it.
pub fn schedule(table: &SinrTable) -> ScheduleResult {
    let mut s = BeamScheduler::new(table.beams());
    for k in 0..table.users() {
        s.offer(k, table.row(k));
    }
    s.finish()
}
