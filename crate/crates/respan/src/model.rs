//! Domain model: buses, lines, candidate renewable sites, conventional
//! generators, storage units, demand, and the solved system design.
//!
//! Units are fixed across the crate: capacities in MW (storage energy
//! capacity in MWh), demand and dispatch in MWh per time step, costs in an
//! abstract currency annualized per MW (per MWh for storage energy), and
//! variable costs per MWh.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// A network node.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bus {
    pub id: String,
    pub name: String,
}

/// Transmission corridor kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LineKind {
    #[serde(rename = "AC")]
    Ac,
    #[serde(rename = "DC")]
    Dc,
}

impl fmt::Display for LineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineKind::Ac => write!(f, "AC"),
            LineKind::Dc => write!(f, "DC"),
        }
    }
}

/// Transmission corridor between two buses (transportation model).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Line<S> {
    pub id: String,
    pub from_bus: String,
    pub to_bus: String,
    pub kind: LineKind,
    /// Existing capacity, MW.
    pub kappa0: S,
    /// Maximum allowable total capacity, MW.
    pub kappa_max: S,
    /// Corridor length, km (reporting only).
    pub length_km: S,
    /// Annualized investment cost, currency/MW/yr.
    pub zeta: S,
    /// Fixed O&M cost, currency/MW/yr.
    pub theta_f: S,
    /// Variable O&M cost, currency/MWh.
    pub theta_v: S,
}

/// Candidate renewable site attached to one bus, carrying one technology
/// and a per-step availability series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CandidateSite<S> {
    pub id: String,
    pub bus: String,
    /// Technology tag, e.g. "W_on", "W_off", "PV_u", "PV_d".
    pub tech: String,
    pub lat: S,
    pub lon: S,
    /// Existing capacity, MW.
    pub kappa0: S,
    /// Technical potential, MW.
    pub kappa_max: S,
    pub zeta: S,
    pub theta_f: S,
    pub theta_v: S,
    /// Per-unit availability per time step, each in [0, 1].
    pub cf_series: Vec<S>,
}

/// Dispatchable conventional generator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConventionalGen<S> {
    pub id: String,
    pub bus: String,
    pub tech: String,
    pub kappa0: S,
    pub kappa_max: S,
    pub zeta: S,
    pub theta_f: S,
    pub theta_v: S,
    /// Fixed-capacity legacy units are not sizable and must have
    /// `kappa_max == kappa0`.
    pub sizable: bool,
}

/// Storage unit. Capacity is denominated in energy (MWh); the power rating
/// derives from it via `phi` (1/h).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StorageUnit<S> {
    pub id: String,
    pub bus: String,
    pub tech: String,
    /// Existing energy capacity, MWh.
    pub kappa0: S,
    /// Maximum energy capacity, MWh.
    pub kappa_max: S,
    /// Power-to-energy ratio, 1/h.
    pub phi: S,
    /// Self-discharge efficiency per step, in (0, 1].
    pub eta_sd: S,
    /// Charge efficiency, in (0, 1].
    pub eta_c: S,
    /// Discharge efficiency, in (0, 1].
    pub eta_d: S,
    pub zeta: S,
    pub theta_f: S,
    pub theta_v: S,
    pub sizable: bool,
}

/// Electricity demand at one bus, MWh per step.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DemandSeries<S> {
    pub bus: String,
    pub lambda: Vec<S>,
}

/// Horizon-wide parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GlobalParams<S> {
    /// Number of time steps.
    pub horizon_len: usize,
    /// Step length in hours.
    pub step_hours: S,
    /// Weight relating the horizon length to annualized costs.
    pub omega: S,
    /// Unserved-demand penalty, currency/MWh.
    pub theta_e: S,
}

/// Full problem data for one planning instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SystemInstance<S> {
    pub buses: Vec<Bus>,
    pub lines: Vec<Line<S>>,
    pub sites: Vec<CandidateSite<S>>,
    pub generators: Vec<ConventionalGen<S>>,
    pub storages: Vec<StorageUnit<S>>,
    pub demands: Vec<DemandSeries<S>>,
    pub params: GlobalParams<S>,
}

impl<S: Scalar> SystemInstance<S> {
    pub fn horizon(&self) -> usize {
        self.params.horizon_len
    }

    /// Position of a bus in `buses`, if present.
    pub fn bus_position(&self, id: &str) -> Option<usize> {
        self.buses.iter().position(|b| b.id == id)
    }

    /// Site indices grouped per bus position (the per-bus partition of the
    /// candidate set).
    pub fn sites_by_bus(&self) -> Vec<Vec<usize>> {
        let mut groups = vec![Vec::new(); self.buses.len()];
        for (i, site) in self.sites.iter().enumerate() {
            if let Some(b) = self.bus_position(&site.bus) {
                groups[b].push(i);
            }
        }
        groups
    }

    /// Demand series for a bus position; all-zero if the bus has none.
    pub fn demand_at(&self, bus_pos: usize) -> Vec<S> {
        let id = &self.buses[bus_pos].id;
        self.demands
            .iter()
            .find(|d| &d.bus == id)
            .map(|d| d.lambda.clone())
            .unwrap_or_else(|| vec![S::zero(); self.horizon()])
    }

    /// Distinct technology tags over candidate sites, sorted.
    pub fn site_techs(&self) -> Vec<String> {
        let set: BTreeSet<&str> = self.sites.iter().map(|s| s.tech.as_str()).collect();
        set.into_iter().map(str::to_owned).collect()
    }

    /// Returns a copy keeping only the candidate sites whose id passes the
    /// filter; everything else is untouched.
    pub fn with_sites_filtered(&self, keep: impl Fn(&str) -> bool) -> Self {
        let mut out = self.clone();
        out.sites.retain(|s| keep(&s.id));
        out
    }
}

/// One failed instance invariant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    /// Which entity, e.g. `site s3`.
    pub entity: String,
    pub field: String,
    pub rule: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}: {}", self.entity, self.field, self.rule)
    }
}

fn violation(entity: impl fmt::Display, field: &str, rule: impl fmt::Display) -> Violation {
    Violation {
        entity: entity.to_string(),
        field: field.to_string(),
        rule: rule.to_string(),
    }
}

fn check_id(out: &mut Vec<Violation>, entity: &str, id: &str) {
    if id.is_empty() {
        out.push(violation(entity, "id", "must not be empty"));
    } else if id.chars().any(char::is_whitespace) {
        out.push(violation(entity, "id", "must not contain whitespace"));
    }
}

fn check_capacity_bounds<S: Scalar>(
    out: &mut Vec<Violation>,
    entity: &str,
    kappa0: S,
    kappa_max: S,
) {
    if kappa0 < S::zero() {
        out.push(violation(entity, "kappa0", "must be >= 0"));
    }
    if kappa_max < kappa0 {
        out.push(violation(entity, "kappa_max", "must be >= kappa0"));
    }
}

/// Checks every instance invariant and returns the findings; an empty list
/// means the instance is well-formed.
pub fn validate_instance<S: Scalar>(inst: &SystemInstance<S>) -> Vec<Violation> {
    let mut out = Vec::new();
    let horizon = inst.params.horizon_len;

    if horizon < 1 {
        out.push(violation("params", "horizon_len", "must be >= 1"));
    }
    if !(inst.params.step_hours > S::zero()) {
        out.push(violation("params", "step_hours", "must be > 0"));
    }
    if !(inst.params.omega > S::zero()) {
        out.push(violation("params", "omega", "must be > 0"));
    }
    if !(inst.params.theta_e > S::zero()) {
        out.push(violation("params", "theta_e", "must be > 0"));
    }

    let mut bus_ids = BTreeSet::new();
    for bus in &inst.buses {
        let entity = format!("bus {}", bus.id);
        check_id(&mut out, &entity, &bus.id);
        if !bus_ids.insert(bus.id.as_str()) {
            out.push(violation(&entity, "id", "duplicate bus id"));
        }
    }
    let bus_exists = |id: &str| bus_ids.contains(id);

    let mut line_ids = BTreeSet::new();
    let mut line_pairs = BTreeSet::new();
    for line in &inst.lines {
        let entity = format!("line {}", line.id);
        check_id(&mut out, &entity, &line.id);
        if !line_ids.insert(line.id.as_str()) {
            out.push(violation(&entity, "id", "duplicate line id"));
        }
        if line.from_bus == line.to_bus {
            out.push(violation(&entity, "to_bus", "must differ from from_bus"));
        }
        if !line_pairs.insert((line.from_bus.as_str(), line.to_bus.as_str())) {
            out.push(violation(&entity, "from_bus", "duplicate (from, to) pair"));
        }
        for (field, bus) in [("from_bus", &line.from_bus), ("to_bus", &line.to_bus)] {
            if !bus_exists(bus) {
                out.push(violation(&entity, field, format!("unknown bus {bus}")));
            }
        }
        check_capacity_bounds(&mut out, &entity, line.kappa0, line.kappa_max);
    }

    let mut site_ids = BTreeSet::new();
    for site in &inst.sites {
        let entity = format!("site {}", site.id);
        check_id(&mut out, &entity, &site.id);
        if !site_ids.insert(site.id.as_str()) {
            out.push(violation(&entity, "id", "duplicate site id"));
        }
        if !bus_exists(&site.bus) {
            out.push(violation(&entity, "bus", format!("unknown bus {}", site.bus)));
        }
        check_capacity_bounds(&mut out, &entity, site.kappa0, site.kappa_max);
        if site.cf_series.len() != horizon {
            out.push(violation(
                &entity,
                "cf_series",
                format!("length mismatch: {} != horizon {horizon}", site.cf_series.len()),
            ));
        }
        for (t, &cf) in site.cf_series.iter().enumerate() {
            if !(cf >= S::zero() && cf <= S::one()) {
                out.push(violation(&entity, "cf_series", format!("cf out of [0,1] at t={t}")));
            }
        }
    }

    let mut gen_ids = BTreeSet::new();
    for gen in &inst.generators {
        let entity = format!("generator {}", gen.id);
        check_id(&mut out, &entity, &gen.id);
        if !gen_ids.insert(gen.id.as_str()) {
            out.push(violation(&entity, "id", "duplicate generator id"));
        }
        if !bus_exists(&gen.bus) {
            out.push(violation(&entity, "bus", format!("unknown bus {}", gen.bus)));
        }
        check_capacity_bounds(&mut out, &entity, gen.kappa0, gen.kappa_max);
        if !gen.sizable && gen.kappa_max != gen.kappa0 {
            out.push(violation(&entity, "kappa_max", "fixed unit must have kappa_max == kappa0"));
        }
    }

    let mut storage_ids = BTreeSet::new();
    for sto in &inst.storages {
        let entity = format!("storage {}", sto.id);
        check_id(&mut out, &entity, &sto.id);
        if !storage_ids.insert(sto.id.as_str()) {
            out.push(violation(&entity, "id", "duplicate storage id"));
        }
        if !bus_exists(&sto.bus) {
            out.push(violation(&entity, "bus", format!("unknown bus {}", sto.bus)));
        }
        check_capacity_bounds(&mut out, &entity, sto.kappa0, sto.kappa_max);
        if !(sto.phi > S::zero()) {
            out.push(violation(&entity, "phi", "must be > 0"));
        }
        for (field, eta) in [("eta_sd", sto.eta_sd), ("eta_c", sto.eta_c), ("eta_d", sto.eta_d)] {
            if !(eta > S::zero() && eta <= S::one()) {
                out.push(violation(&entity, field, "must be in (0, 1]"));
            }
        }
        if !sto.sizable && sto.kappa_max != sto.kappa0 {
            out.push(violation(&entity, "kappa_max", "fixed unit must have kappa_max == kappa0"));
        }
    }

    let mut demand_buses = BTreeSet::new();
    for dem in &inst.demands {
        let entity = format!("demand at {}", dem.bus);
        if !bus_exists(&dem.bus) {
            out.push(violation(&entity, "bus", format!("unknown bus {}", dem.bus)));
        }
        if !demand_buses.insert(dem.bus.as_str()) {
            out.push(violation(&entity, "bus", "duplicate demand series for bus"));
        }
        if dem.lambda.len() != horizon {
            out.push(violation(
                &entity,
                "lambda",
                format!("length mismatch: {} != horizon {horizon}", dem.lambda.len()),
            ));
        }
        for (t, &v) in dem.lambda.iter().enumerate() {
            if !(v >= S::zero()) {
                out.push(violation(&entity, "lambda", format!("negative demand at t={t}")));
            }
        }
    }

    out
}

/// Solver accounting carried on a solved design.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SolveStats {
    pub iterations: u64,
    pub wall_seconds: f64,
    pub variables: usize,
    pub constraints: usize,
    pub nonzeros: usize,
}

/// Installed capacities and dispatch trajectories extracted from an optimal
/// solve, keyed by asset id. Capacity values are the sized additions `K`
/// (existing `kappa0` is not included).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolvedDesign<S> {
    pub objective: S,
    pub site_capacity: BTreeMap<String, S>,
    pub gen_capacity: BTreeMap<String, S>,
    pub storage_capacity: BTreeMap<String, S>,
    pub line_capacity: BTreeMap<String, S>,
    /// Site feed-in per step.
    pub site_dispatch: BTreeMap<String, Vec<S>>,
    /// Conventional dispatch per step.
    pub gen_dispatch: BTreeMap<String, Vec<S>>,
    /// Signed line flow per step, positive from `from_bus` to `to_bus`.
    pub line_flow: BTreeMap<String, Vec<S>>,
    /// Storage charge flow per step, nonnegative.
    pub charge: BTreeMap<String, Vec<S>>,
    /// Storage discharge flow per step, nonnegative.
    pub discharge: BTreeMap<String, Vec<S>>,
    /// Storage state of charge per step.
    pub soc: BTreeMap<String, Vec<S>>,
    /// Unserved demand per bus per step.
    pub unserved: BTreeMap<String, Vec<S>>,
    pub stats: SolveStats,
}

impl<S: Scalar> SolvedDesign<S> {
    /// An all-zero design shaped to the instance.
    pub fn zero(inst: &SystemInstance<S>) -> Self {
        let horizon = inst.horizon();
        let zeros = || vec![S::zero(); horizon];
        SolvedDesign {
            objective: S::zero(),
            site_capacity: inst.sites.iter().map(|s| (s.id.clone(), S::zero())).collect(),
            gen_capacity: inst.generators.iter().map(|g| (g.id.clone(), S::zero())).collect(),
            storage_capacity: inst.storages.iter().map(|s| (s.id.clone(), S::zero())).collect(),
            line_capacity: inst.lines.iter().map(|l| (l.id.clone(), S::zero())).collect(),
            site_dispatch: inst.sites.iter().map(|s| (s.id.clone(), zeros())).collect(),
            gen_dispatch: inst.generators.iter().map(|g| (g.id.clone(), zeros())).collect(),
            line_flow: inst.lines.iter().map(|l| (l.id.clone(), zeros())).collect(),
            charge: inst.storages.iter().map(|s| (s.id.clone(), zeros())).collect(),
            discharge: inst.storages.iter().map(|s| (s.id.clone(), zeros())).collect(),
            soc: inst.storages.iter().map(|s| (s.id.clone(), zeros())).collect(),
            unserved: inst.buses.iter().map(|b| (b.id.clone(), zeros())).collect(),
            stats: SolveStats::default(),
        }
    }
}

/// Dimension mismatch between a design and an instance.
#[derive(Debug, Clone, thiserror::Error, PartialEq)]
pub enum DesignError {
    #[error("design is missing {kind} {id}")]
    MissingAsset { kind: &'static str, id: String },
    #[error("series for {kind} {id} has length {got}, expected {expected}")]
    SeriesLength { kind: &'static str, id: String, got: usize, expected: usize },
}

fn series<'a, S>(
    map: &'a BTreeMap<String, Vec<S>>,
    kind: &'static str,
    id: &str,
    horizon: usize,
) -> Result<&'a [S], DesignError> {
    let v = map
        .get(id)
        .ok_or_else(|| DesignError::MissingAsset { kind, id: id.to_string() })?;
    if v.len() != horizon {
        return Err(DesignError::SeriesLength {
            kind,
            id: id.to_string(),
            got: v.len(),
            expected: horizon,
        });
    }
    Ok(v)
}

fn capacity<S: Scalar>(
    map: &BTreeMap<String, S>,
    kind: &'static str,
    id: &str,
) -> Result<S, DesignError> {
    map.get(id)
        .copied()
        .ok_or_else(|| DesignError::MissingAsset { kind, id: id.to_string() })
}

/// Recomputes the total system cost of a design from its primal values:
/// the annualization-weighted investment and fixed block plus all variable
/// operating costs and the unserved-demand penalty. The storage variable
/// term charges `charge + discharge`; line flow is charged on `|flow|`.
pub fn total_cost<S: Scalar>(
    design: &SolvedDesign<S>,
    inst: &SystemInstance<S>,
) -> Result<S, DesignError> {
    let horizon = inst.horizon();
    let mut invest = S::zero();
    let mut operate = S::zero();

    for site in &inst.sites {
        let k = capacity(&design.site_capacity, "site", &site.id)?;
        invest += (site.zeta + site.theta_f) * k;
        let p = series(&design.site_dispatch, "site", &site.id, horizon)?;
        operate += p.iter().map(|&x| site.theta_v * x).sum::<S>();
    }
    for gen in &inst.generators {
        let k = capacity(&design.gen_capacity, "generator", &gen.id)?;
        invest += (gen.zeta + gen.theta_f) * k;
        let p = series(&design.gen_dispatch, "generator", &gen.id, horizon)?;
        operate += p.iter().map(|&x| gen.theta_v * x).sum::<S>();
    }
    for sto in &inst.storages {
        let k = capacity(&design.storage_capacity, "storage", &sto.id)?;
        invest += (sto.zeta + sto.theta_f) * k;
        let c = series(&design.charge, "storage", &sto.id, horizon)?;
        let d = series(&design.discharge, "storage", &sto.id, horizon)?;
        operate += c
            .iter()
            .zip(d)
            .map(|(&pc, &pd)| sto.theta_v * (pc + pd))
            .sum::<S>();
    }
    for line in &inst.lines {
        let k = capacity(&design.line_capacity, "line", &line.id)?;
        invest += (line.zeta + line.theta_f) * k;
        let p = series(&design.line_flow, "line", &line.id, horizon)?;
        operate += p.iter().map(|&x| line.theta_v * x.abs()).sum::<S>();
    }
    for bus in &inst.buses {
        let pe = series(&design.unserved, "bus", &bus.id, horizon)?;
        operate += pe.iter().map(|&x| inst.params.theta_e * x).sum::<S>();
    }

    Ok(inst.params.omega * invest + operate)
}

#[cfg(test)]
pub(crate) mod test_fixtures {
    use super::*;

    /// Minimal well-formed instance: two buses joined by a line, one site,
    /// one generator, one storage unit, demand at both buses.
    pub fn two_bus_instance() -> SystemInstance<f64> {
        let horizon = 4;
        SystemInstance {
            buses: vec![
                Bus { id: "b1".into(), name: "north".into() },
                Bus { id: "b2".into(), name: "south".into() },
            ],
            lines: vec![Line {
                id: "l1".into(),
                from_bus: "b1".into(),
                to_bus: "b2".into(),
                kind: LineKind::Ac,
                kappa0: 5.0,
                kappa_max: 50.0,
                length_km: 120.0,
                zeta: 30.0,
                theta_f: 5.0,
                theta_v: 0.01,
            }],
            sites: vec![CandidateSite {
                id: "s1".into(),
                bus: "b1".into(),
                tech: "W_on".into(),
                lat: 50.0,
                lon: 4.0,
                kappa0: 0.0,
                kappa_max: 100.0,
                zeta: 90.0,
                theta_f: 10.0,
                theta_v: 0.1,
                cf_series: vec![0.5, 0.8, 0.2, 0.6],
            }],
            generators: vec![ConventionalGen {
                id: "g1".into(),
                bus: "b2".into(),
                tech: "CCGT".into(),
                kappa0: 0.0,
                kappa_max: 200.0,
                zeta: 60.0,
                theta_f: 8.0,
                theta_v: 50.0,
                sizable: true,
            }],
            storages: vec![StorageUnit {
                id: "st1".into(),
                bus: "b1".into(),
                tech: "Li-Ion".into(),
                kappa0: 0.0,
                kappa_max: 80.0,
                phi: 0.25,
                eta_sd: 1.0,
                eta_c: 0.95,
                eta_d: 0.95,
                zeta: 40.0,
                theta_f: 2.0,
                theta_v: 0.02,
                sizable: true,
            }],
            demands: vec![
                DemandSeries { bus: "b1".into(), lambda: vec![10.0, 12.0, 8.0, 11.0] },
                DemandSeries { bus: "b2".into(), lambda: vec![20.0, 18.0, 22.0, 19.0] },
            ],
            params: GlobalParams { horizon_len: horizon, step_hours: 1.0, omega: 1.0, theta_e: 1e4 },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::test_fixtures::two_bus_instance;
    use super::*;

    #[test]
    fn well_formed_instance_has_no_violations() {
        assert_eq!(validate_instance(&two_bus_instance()), vec![]);
    }

    #[test]
    fn cf_out_of_range_is_reported() {
        let mut inst = two_bus_instance();
        inst.sites[0].cf_series[3] = 1.2;
        let violations = validate_instance(&inst);
        assert_eq!(violations.len(), 1);
        assert_eq!(violations[0].field, "cf_series");
        assert!(violations[0].rule.contains("out of [0,1]"));
        assert!(violations[0].rule.contains("t=3"));
    }

    #[test]
    fn demand_length_mismatch_is_reported() {
        let mut inst = two_bus_instance();
        inst.demands[0].lambda.pop();
        let violations = validate_instance(&inst);
        assert_eq!(violations.len(), 1);
        assert!(violations[0].rule.contains("length mismatch"));
    }

    #[test]
    fn fixed_generator_with_headroom_is_reported() {
        let mut inst = two_bus_instance();
        inst.generators[0].sizable = false;
        let violations = validate_instance(&inst);
        assert_eq!(violations.len(), 1);
        assert!(violations[0].rule.contains("kappa_max == kappa0"));
    }

    #[test]
    fn zero_design_costs_nothing() {
        let inst = two_bus_instance();
        let design = SolvedDesign::zero(&inst);
        assert_eq!(total_cost(&design, &inst).unwrap(), 0.0);
    }

    #[test]
    fn single_capacity_term() {
        // K = 10 MW at zeta + theta_f = 100/MW/yr, omega = 1, no dispatch.
        let mut inst = two_bus_instance();
        inst.sites[0].zeta = 90.0;
        inst.sites[0].theta_f = 10.0;
        let mut design = SolvedDesign::zero(&inst);
        design.site_capacity.insert("s1".into(), 10.0);
        assert_eq!(total_cost(&design, &inst).unwrap(), 1000.0);
    }

    #[test]
    fn missing_asset_is_a_dimension_error() {
        let inst = two_bus_instance();
        let mut design = SolvedDesign::zero(&inst);
        design.site_capacity.clear();
        assert!(matches!(
            total_cost(&design, &inst),
            Err(DesignError::MissingAsset { kind: "site", .. })
        ));
    }

    #[test]
    fn instance_round_trips_through_json() {
        let inst = two_bus_instance();
        let text = serde_json::to_string(&inst).unwrap();
        let back: SystemInstance<f64> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, inst);
    }
}
