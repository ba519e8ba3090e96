//! Globally adaptive Gauss–Kronrod (G10/K21) quadrature.
//!
//! Generic over real and complex integrands. Intervals are bisected in order
//! of decreasing error estimate until the summed estimate meets
//! `max(abs, rel·|I|)`.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Values that can be integrated: a real vector space with a norm.
pub trait QuadValue: Copy + Default + Add<Output = Self> + Sub<Output = Self> + Mul<f64, Output = Self> {
    fn magnitude(&self) -> f64;
}

impl QuadValue for f64 {
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

impl QuadValue for Complex64 {
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

/// Stopping rule for [`integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub abs: f64,
    pub rel: f64,
    pub max_subdivisions: usize,
}

impl Tolerances {
    pub const fn absolute(abs: f64) -> Self {
        Tolerances {
            abs,
            rel: 0.0,
            max_subdivisions: 2000,
        }
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances::absolute(1e-8)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate<T> {
    pub value: T,
    pub error_bound: f64,
    pub evaluations: usize,
}

#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689,
    0.973_906_528_517_171_720_077_964_012_084,
    0.930_157_491_355_708_226_001_207_180_060,
    0.865_063_366_688_984_510_732_096_688_423,
    0.780_817_726_586_416_897_063_717_578_345,
    0.679_409_568_299_024_406_234_327_365_115,
    0.562_757_134_668_604_683_339_000_099_273,
    0.433_395_394_129_247_190_799_265_943_166,
    0.294_392_862_701_460_198_131_126_603_104,
    0.148_874_338_981_631_210_884_826_001_130,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062,
    0.032_558_162_307_964_727_478_818_972_459,
    0.054_755_896_574_351_996_031_381_300_245,
    0.075_039_674_810_919_952_767_043_140_916,
    0.093_125_454_583_697_605_535_065_465_083,
    0.109_387_158_802_297_641_899_210_590_326,
    0.123_491_976_262_065_851_077_589_322_025,
    0.134_709_217_311_473_325_928_054_001_772,
    0.142_775_938_577_060_080_797_094_273_139,
    0.147_739_104_901_338_491_374_841_515_972,
    0.149_445_554_002_916_905_664_936_468_390,
];

// Gauss weights for the odd-indexed Kronrod nodes XGK[1], XGK[3], ..., XGK[9].
#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893,
    0.149_451_349_150_580_593_145_776_339_658,
    0.219_086_362_515_982_043_995_534_934_228,
    0.269_266_719_309_996_355_091_226_921_569,
    0.295_524_224_714_752_870_173_892_994_651,
];

#[derive(Debug, Clone, Copy)]
struct Panel<T> {
    a: f64,
    b: f64,
    value: T,
    error: f64,
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut scaled = err.abs();
    if res_asc != 0.0 && scaled != 0.0 {
        let scale = (200.0 * scaled / res_asc).powf(1.5);
        scaled = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        scaled = scaled.max(50.0 * f64::EPSILON * res_abs);
    }
    scaled
}

fn kronrod21<T, F>(f: &mut F, a: f64, b: f64) -> Panel<T>
where
    T: QuadValue,
    F: FnMut(f64) -> T,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let fc = f(center);
    let mut kronrod = fc * WGK[10];
    let mut gauss = T::default();
    let mut res_abs = WGK[10] * fc.magnitude();
    let mut samples = [(T::default(), T::default()); 10];

    for (j, &x) in XGK[..10].iter().enumerate() {
        let dx = half * x;
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        samples[j] = (f1, f2);
        kronrod = kronrod + (f1 + f2) * WGK[j];
        res_abs += WGK[j] * (f1.magnitude() + f2.magnitude());
        if j % 2 == 1 {
            gauss = gauss + (f1 + f2) * WG[j / 2];
        }
    }

    let mean = kronrod * 0.5;
    let mut res_asc = WGK[10] * (fc - mean).magnitude();
    for (j, (f1, f2)) in samples.iter().enumerate() {
        res_asc += WGK[j] * ((*f1 - mean).magnitude() + (*f2 - mean).magnitude());
    }

    let scale = half.abs();
    let error = rescale_error((kronrod - gauss).magnitude() * scale, res_abs * scale, res_asc * scale);
    Panel {
        a,
        b,
        value: kronrod * half,
        error,
    }
}

/// Integrates `f` over `[a, b]`.
pub fn integrate<T, F>(f: F, a: f64, b: f64, tol: Tolerances) -> Result<Estimate<T>>
where
    T: QuadValue,
    F: FnMut(f64) -> T,
{
    integrate_with_breaks(f, &[a, b], tol)
}

/// Integrates `f` over `[points[0], points[last]]`, starting from the panels
/// delimited by `points` (kinks and ridges of the integrand belong there).
/// `points` must be sorted ascending; duplicates are ignored.
pub fn integrate_with_breaks<T, F>(mut f: F, points: &[f64], tol: Tolerances) -> Result<Estimate<T>>
where
    T: QuadValue,
    F: FnMut(f64) -> T,
{
    assert!(points.len() >= 2, "need at least one interval");
    let mut panels: Vec<Panel<T>> = points
        .windows(2)
        .filter(|w| w[1] > w[0])
        .map(|w| kronrod21(&mut f, w[0], w[1]))
        .collect();
    if panels.is_empty() {
        return Ok(Estimate {
            value: T::default(),
            error_bound: 0.0,
            evaluations: 0,
        });
    }
    let mut evaluations = 21 * panels.len();

    loop {
        let (value, error) = panels
            .iter()
            .fold((T::default(), 0.0), |(v, e), p| (v + p.value, e + p.error));
        let target = tol.abs.max(tol.rel * value.magnitude());
        if error <= target {
            return Ok(Estimate {
                value,
                error_bound: error,
                evaluations,
            });
        }
        if panels.len() >= tol.max_subdivisions {
            return Err(Error::QuadratureNonconvergence {
                value: value.magnitude(),
                error_bound: error,
                subdivisions: panels.len(),
            });
        }

        let (worst, _) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .expect("non-empty");
        let Panel { a, b, .. } = panels.swap_remove(worst);
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            // interval can no longer be split in floating point
            return Err(Error::QuadratureNonconvergence {
                value: value.magnitude(),
                error_bound: error,
                subdivisions: panels.len() + 1,
            });
        }
        panels.push(kronrod21(&mut f, a, mid));
        panels.push(kronrod21(&mut f, mid, b));
        evaluations += 42;
    }
}
