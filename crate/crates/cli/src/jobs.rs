//! The three computations, each exposed as a list of variants that must
//! agree: variant 0 is the default path, the rest are cross-checks.

use eigendisc_core::discriminant::{discriminant_ci, discriminant_robust, DiscError};
use eigendisc_core::eigen::{
    eigendisc, eigendisc_at_index, eigendisc_parametric, eigendisc_perturbed, index_choices, EigenError, EigenOptions,
};
use eigendisc_core::exactla::{interpolate, EvalRing, IntegerRing, PointOutcome, PolyRing};
use eigendisc_core::mpoly::{MPoly, RationalMapData};
use eigendisc_core::resultant::{
    random_unimodular, resultant, resultant_macaulay, resultant_via_change, ResultantError,
};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{from_interp, CliError};

pub type Extras = Vec<(String, String)>;

pub trait Job: Sync {
    fn variant_names(&self) -> Vec<String>;

    /// `Ok(None)` when the variant does not apply to this input.
    fn eval<R: EvalRing>(&self, ring: &R, k: usize, extras: &mut Extras) -> Result<Option<R::Elem>, CliError>;

    fn specialize(&self, point: &[(usize, BigInt)]) -> Self
    where
        Self: Sized;

    /// The value as a polynomial in the parameters. Without bounds the
    /// computation runs over the polynomial ring directly.
    fn eval_parametric(
        &self,
        bounds: Option<&[(usize, u32)]>,
        k: usize,
        extras: &mut Extras,
    ) -> Result<Option<MPoly<BigInt>>, CliError>
    where
        Self: Sized,
    {
        match bounds {
            None => self.eval(&PolyRing, k, extras),
            Some(b) => interpolate_variant(self, b, k),
        }
    }
}

fn interpolate_variant<J: Job>(job: &J, bounds: &[(usize, u32)], k: usize) -> Result<Option<MPoly<BigInt>>, CliError> {
    let ring = IntegerRing::new();
    let result = interpolate(bounds, |point| match job.specialize(point).eval(&ring, k, &mut Vec::new())? {
        Some(v) => Ok(PointOutcome::Value(v)),
        None => Ok(PointOutcome::Skip),
    });
    match result {
        Ok(p) => Ok(Some(p)),
        Err(e) => from_interp(e).map(|()| None),
    }
}

pub struct ResultantJob {
    pub forms: Vec<MPoly<BigInt>>,
    pub degrees: Vec<u32>,
    pub seed: u64,
}

impl Job for ResultantJob {
    fn variant_names(&self) -> Vec<String> {
        let other = if self.forms.len() == 2 { "macaulay" } else { "coordinate_change" };
        vec!["default".into(), other.into()]
    }

    fn eval<R: EvalRing>(&self, ring: &R, k: usize, _: &mut Extras) -> Result<Option<R::Elem>, CliError> {
        let value = match k {
            0 => resultant(ring, &self.forms, &self.degrees, self.seed),
            _ if self.forms.len() == 2 => resultant_macaulay(ring, &self.forms, &self.degrees),
            _ => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.seed ^ 0xc405_5c4e);
                let phi = random_unimodular(self.forms.len(), &mut rng);
                resultant_via_change(ring, &self.forms, &self.degrees, &phi)
            }
        };
        match value {
            Ok(v) => Ok(Some(v)),
            Err(ResultantError::NonGeneric) if k > 0 => Ok(None),
            Err(e) => Err(e.into()),
        }
    }

    fn specialize(&self, point: &[(usize, BigInt)]) -> Self {
        ResultantJob {
            forms: self.forms.iter().map(|f| f.eval_params(point)).collect(),
            degrees: self.degrees.clone(),
            seed: self.seed,
        }
    }
}

pub struct DiscriminantJob {
    pub forms: Vec<MPoly<BigInt>>,
    pub degrees: Vec<u32>,
    pub seed: u64,
}

impl Job for DiscriminantJob {
    fn variant_names(&self) -> Vec<String> {
        let mut names = vec!["default".to_string()];
        names.extend((0..=self.forms.len()).map(|w| format!("witness.x{w}")));
        names
    }

    fn eval<R: EvalRing>(&self, ring: &R, k: usize, _: &mut Extras) -> Result<Option<R::Elem>, CliError> {
        if k == 0 {
            return Ok(Some(discriminant_robust(ring, &self.forms, &self.degrees, self.seed)?));
        }
        match discriminant_ci(ring, &self.forms, &self.degrees, k - 1, self.seed) {
            Ok(v) => Ok(Some(v)),
            Err(DiscError::WitnessVanishes(_)) => Ok(None),
            Err(e) => Err(e.into()),
        }
    }

    fn specialize(&self, point: &[(usize, BigInt)]) -> Self {
        DiscriminantJob {
            forms: self.forms.iter().map(|f| f.eval_params(point)).collect(),
            degrees: self.degrees.clone(),
            seed: self.seed,
        }
    }
}

pub struct EigenJob {
    pub map: RationalMapData,
    pub opts: EigenOptions,
    /// Direction of the `t`-family when the perturbation path is requested.
    pub perturb: Option<RationalMapData>,
    pub certificate: bool,
}

impl EigenJob {
    fn tuples(&self) -> Vec<Vec<usize>> {
        index_choices(self.map.n())
    }

    fn fixed(&self, k: usize) -> EigenOptions {
        EigenOptions { index: Some(self.tuples()[k - 1].clone()), fallback: false, robust: false, seed: self.opts.seed }
    }
}

fn join(idx: &[usize], sep: &str) -> String {
    idx.iter().map(usize::to_string).collect::<Vec<_>>().join(sep)
}

impl Job for EigenJob {
    fn variant_names(&self) -> Vec<String> {
        let mut names = vec!["default".to_string()];
        names.extend(self.tuples().iter().map(|t| format!("index.{}", join(t, "-"))));
        names
    }

    fn eval<R: EvalRing>(&self, ring: &R, k: usize, extras: &mut Extras) -> Result<Option<R::Elem>, CliError> {
        if k > 0 {
            return match eigendisc_at_index(ring, &self.map, &self.tuples()[k - 1], self.opts.seed) {
                Ok(r) => Ok(Some(r.value)),
                Err(EigenError::VanishingCofactors(_)) => Ok(None),
                Err(e) => Err(e.into()),
            };
        }
        if let Some(dir) = &self.perturb {
            // the limit is computed over ZZ and then mapped into the ring
            let p = eigendisc_perturbed(&self.map, dir, &self.opts)?;
            extras.push(("path".into(), "perturbation".into()));
            return Ok(Some(ring.lift(&p).map_err(|e| CliError::Tripwire(e.to_string()))?));
        }
        let r = eigendisc(ring, &self.map, &self.opts)?;
        extras.push(("index".into(), join(&r.index, ",")));
        if let Some(ch) = &r.change {
            let rows: Vec<String> =
                ch.phi.iter().map(|row| row.iter().map(BigInt::to_string).collect::<Vec<_>>().join(",")).collect();
            extras.push(("coordinate_change".into(), rows.join(";")));
            extras.push(("coordinate_change.det".into(), ch.det.to_string()));
        }
        if self.certificate {
            extras.push(("certificate.disc_of_minors".into(), r.disc_of_minors.to_string()));
            for c in &r.cofactors {
                extras.push((format!("certificate.cofactor.{}^{}", c.name, c.power), c.value.to_string()));
            }
            extras.push(("certificate.verified".into(), r.verify(ring).to_string()));
        }
        Ok(Some(r.value))
    }

    fn specialize(&self, point: &[(usize, BigInt)]) -> Self {
        EigenJob {
            map: self.map.eval_params(point),
            opts: self.opts.clone(),
            perturb: self.perturb.clone(),
            certificate: false,
        }
    }

    fn eval_parametric(
        &self,
        bounds: Option<&[(usize, u32)]>,
        k: usize,
        extras: &mut Extras,
    ) -> Result<Option<MPoly<BigInt>>, CliError> {
        if k == 0 {
            if let Some(dir) = &self.perturb {
                extras.push(("path".into(), "perturbation".into()));
                return Ok(Some(eigendisc_perturbed(&self.map, dir, &self.opts)?));
            }
            return Ok(Some(eigendisc_parametric(&self.map, bounds, &self.opts)?));
        }
        match eigendisc_parametric(&self.map, bounds, &self.fixed(k)) {
            Ok(p) => Ok(Some(p)),
            Err(EigenError::VanishingCofactors(_)) => Ok(None),
            Err(e) => Err(e.into()),
        }
    }
}
