//! The classical limit of the protocol (α = 0) on plain bits.
//!
//! A source emits anti-correlated pairs `(↑₂, ↓₃)` or `(↓₂, ↑₃)` with equal
//! probability. Alice compares bit 1 with bit 2 and sends one bit: "different"
//! (Ψ detection) or "same" (Φ detection). Bob flips bit 3 on "same". This is a
//! one-time pad where bit 2 is the key.
//!
//! Serialised encoding: ↑ = 0, ↓ = 1.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Smallest sample count accepted by the no-message control.
pub const MIN_CONTROL_SAMPLES: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "u8", try_from = "u8")]
pub enum Bit {
    Up,
    Down,
}

impl Bit {
    pub const ALL: [Bit; 2] = [Bit::Up, Bit::Down];

    pub fn flip(self) -> Self {
        match self {
            Bit::Up => Bit::Down,
            Bit::Down => Bit::Up,
        }
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> Self {
        if rng.gen::<bool>() {
            Bit::Up
        } else {
            Bit::Down
        }
    }

    /// `Up` with probability `p_up`.
    pub fn bernoulli<R: Rng + ?Sized>(rng: &mut R, p_up: f64) -> Self {
        if rng.gen::<f64>() < p_up {
            Bit::Up
        } else {
            Bit::Down
        }
    }
}

impl From<Bit> for u8 {
    fn from(b: Bit) -> u8 {
        match b {
            Bit::Up => 0,
            Bit::Down => 1,
        }
    }
}

impl TryFrom<u8> for Bit {
    type Error = String;

    fn try_from(v: u8) -> std::result::Result<Self, String> {
        match v {
            0 => Ok(Bit::Up),
            1 => Ok(Bit::Down),
            other => Err(format!("bit value {other} is not 0 or 1")),
        }
    }
}

impl fmt::Display for Bit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Bit::Up => "↑",
            Bit::Down => "↓",
        })
    }
}

/// Bits 2 and 3 from the source; always opposite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CorrelatedPair {
    bit2: Bit,
}

impl CorrelatedPair {
    pub fn from_alice_bit(bit2: Bit) -> Self {
        Self { bit2 }
    }

    pub fn bit2(self) -> Bit {
        self.bit2
    }

    pub fn bit3(self) -> Bit {
        self.bit2.flip()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassicalMessage {
    /// Bits 1 and 2 differ.
    PsiDetection,
    /// Bits 1 and 2 agree.
    PhiDetection,
}

pub fn source_pair<R: Rng + ?Sized>(rng: &mut R) -> CorrelatedPair {
    CorrelatedPair::from_alice_bit(Bit::random(rng))
}

/// XOR of Alice's two bits.
pub fn alice_compare(bit1: Bit, bit2: Bit) -> ClassicalMessage {
    if bit1 != bit2 {
        ClassicalMessage::PsiDetection
    } else {
        ClassicalMessage::PhiDetection
    }
}

/// Conditional NOT.
pub fn bob_correct(bit3: Bit, msg: ClassicalMessage) -> Bit {
    match msg {
        ClassicalMessage::PsiDetection => bit3,
        ClassicalMessage::PhiDetection => bit3.flip(),
    }
}

pub fn otp_teleport(bit1: Bit, pair: CorrelatedPair) -> Bit {
    let msg = alice_compare(bit1, pair.bit2());
    bob_correct(pair.bit3(), msg)
}

/// Counts of ↑ and ↓ in a bit sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct BitCounts {
    pub up: usize,
    pub down: usize,
}

impl BitCounts {
    pub fn record(&mut self, b: Bit) {
        match b {
            Bit::Up => self.up += 1,
            Bit::Down => self.down += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.up + self.down
    }

    pub fn up_fraction(&self) -> f64 {
        self.up as f64 / self.total() as f64
    }

    /// `|f̂ − p| / √(p(1−p)/n)`, the deviation of the ↑ fraction in binomial sigmas.
    pub fn z_score(&self, p: f64) -> f64 {
        let sigma = (p * (1.0 - p) / self.total() as f64).sqrt();
        let diff = (self.up_fraction() - p).abs();
        if sigma == 0.0 {
            if diff == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            diff / sigma
        }
    }
}

/// Bob's bit 3 over `samples` fresh pairs when Alice's message never arrives.
pub fn otp_without_message<R: Rng + ?Sized>(
    bit1: Bit,
    samples: usize,
    rng: &mut R,
) -> Result<BitCounts> {
    if samples < MIN_CONTROL_SAMPLES {
        return Err(Error::TooFewSamples {
            min: MIN_CONTROL_SAMPLES,
            got: samples,
        });
    }
    let mut counts = BitCounts::default();
    for _ in 0..samples {
        let pair = source_pair(rng);
        // Alice still compares, but Bob keeps bit 3 as is.
        let _ = alice_compare(bit1, pair.bit2());
        counts.record(pair.bit3());
    }
    Ok(counts)
}

/// Summary of `rounds` protocol runs with uniformly random input bits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OtpRun {
    pub rounds: usize,
    pub successes: usize,
    /// Bob's bit 3 without the message, over the same pairs.
    pub uncorrected: BitCounts,
}

impl OtpRun {
    pub fn success_rate(&self) -> f64 {
        self.successes as f64 / self.rounds as f64
    }
}

pub fn run_rounds<R: Rng + ?Sized>(rounds: usize, rng: &mut R) -> Result<OtpRun> {
    if rounds == 0 {
        return Err(Error::ZeroShots);
    }
    let mut successes = 0;
    let mut uncorrected = BitCounts::default();
    for _ in 0..rounds {
        let bit1 = Bit::random(rng);
        let pair = source_pair(rng);
        if otp_teleport(bit1, pair) == bit1 {
            successes += 1;
        }
        uncorrected.record(pair.bit3());
    }
    Ok(OtpRun {
        rounds,
        successes,
        uncorrected,
    })
}

/// Output distribution of the protocol when bit 1 is ↑ with probability `p_up`.
pub fn bernoulli_teleport<R: Rng + ?Sized>(p_up: f64, rounds: usize, rng: &mut R) -> BitCounts {
    let mut counts = BitCounts::default();
    for _ in 0..rounds {
        let bit1 = Bit::bernoulli(rng, p_up);
        counts.record(otp_teleport(bit1, source_pair(rng)));
    }
    counts
}

/// Plug-in estimate of the mutual information (nats) between bit 1 and the message.
pub fn message_mutual_information(samples: &[(Bit, ClassicalMessage)]) -> f64 {
    let n = samples.len() as f64;
    if samples.is_empty() {
        return 0.0;
    }
    let mut joint = [[0usize; 2]; 2];
    for &(bit, msg) in samples {
        let b = u8::from(bit) as usize;
        let m = match msg {
            ClassicalMessage::PsiDetection => 0,
            ClassicalMessage::PhiDetection => 1,
        };
        joint[b][m] += 1;
    }
    let row: [f64; 2] = [0, 1].map(|b| (joint[b][0] + joint[b][1]) as f64 / n);
    let col: [f64; 2] = [0, 1].map(|m| (joint[0][m] + joint[1][m]) as f64 / n);
    let mut info = 0.0;
    for b in 0..2 {
        for m in 0..2 {
            let p = joint[b][m] as f64 / n;
            if p > 0.0 {
                info += p * (p / (row[b] * col[m])).ln();
            }
        }
    }
    info
}
