"""Catalog verification reports.

build_report runs every computable check for the selected catalog entries
and compares the outcomes against the published claims.  The result is a
plain dict (JSON-ready, deterministically ordered) with one record per
entry plus a summary.  A claim mismatch is recorded as a discrepancy;
external reference entries are listed but never checked and never count.

Every dimension is computed twice: exactly over the rational-function
field, and again after substituting a rational sample value for q; a
disagreement flags the sample point in the crosscheck block.
"""

from fractions import Fraction
from typing import Optional

from .catalog import CATALOG, CatalogEntry, closure_generators, get_entry, \
    instantiate
from .clifford import build_action, counit_invariance_space, \
    module_algebra_shadow, unitality_ok
from .gl2 import gl2_equivalent, invertibility_nilpotency_check, \
    power_commutator_check, quantum_plane_split, verify_relations
from .matrices import MatSpace, centralizer, subalgebra_closure
from .scalars import GaussRational
from .spinors import admissibility, check_spinor, q_commutant

__all__ = ["build_report", "render_table", "report_exit_code"]

POWER_COMMUTATOR_KMAX = 6


def _gauss(q0: Fraction) -> GaussRational:
    return GaussRational(q0, Fraction(0))


def _eval_mats(mats, q0):
    return [m.eval(q0) for m in mats]


def _dims_at(gens, q0) -> tuple:
    """(operator algebra dim, invariants dim) over the evaluated field."""
    ev = _eval_mats(gens, q0)
    alg = subalgebra_closure(ev)
    return alg.dim, centralizer(alg).dim


def _claim(ok: Optional[bool], message: str, discrepancies: list):
    if ok is False:
        discrepancies.append(message)


def _gl2_record(entry: CatalogEntry, q0: Fraction) -> dict:
    rep = instantiate(entry)
    claims = entry.claims
    disc = []

    rel = verify_relations(rep)
    for label, ok in rel.relations.items():
        _claim(ok, f"defining relation failed: {label}", disc)
    _claim(rel.detq_invertible, "quantum determinant not invertible", disc)
    detq_claim = None
    if claims.detq is not None:
        detq_claim = rel.detq == claims.detq
        _claim(detq_claim, "quantum determinant differs from claim", disc)
    pert_claim = None
    if claims.perturbation_nonzero is not None:
        pert_claim = rel.perturbation_nonzero == claims.perturbation_nonzero
        _claim(pert_claim, "perturbation zero/nonzero claim failed", disc)

    cor = invertibility_nilpotency_check(rep)
    _claim(cor.ok, "invertibility/nilpotency consequences failed: "
           + ", ".join(cor.failures), disc)

    pc = power_commutator_check(rep.c11, rep.c22, POWER_COMMUTATOR_KMAX)
    qp = quantum_plane_split(rep)

    dims = {}
    gens = {}
    for mode in ("single", "family"):
        g = closure_generators(entry, mode)
        gens[mode] = g
        alg = subalgebra_closure(g)
        inv = centralizer(alg)
        dims[mode] = {"operator_algebra": alg.dim, "invariants": inv.dim,
                      "_alg": alg, "_inv": inv}

    if claims.dim_operator_algebra is not None:
        _claim(dims["family"]["operator_algebra"]
               == claims.dim_operator_algebra,
               "operator algebra dimension differs from claim "
               f"(got {dims['family']['operator_algebra']}, claimed "
               f"{claims.dim_operator_algebra})", disc)
    if claims.dim_invariants is not None:
        _claim(dims["family"]["invariants"] == claims.dim_invariants,
               "invariant dimension differs from claim "
               f"(got {dims['family']['invariants']}, claimed "
               f"{claims.dim_invariants})", disc)
    op_space_claim = None
    if claims.operator_space is not None:
        op_space_claim = dims["family"]["_alg"] == MatSpace.span(
            list(claims.operator_space))
        _claim(op_space_claim, "operator algebra basis pattern differs "
               "from claim", disc)
    inv_space_claim = None
    if claims.invariant_space is not None:
        inv_space_claim = dims["family"]["_inv"] == MatSpace.span(
            list(claims.invariant_space))
        _claim(inv_space_claim, "invariant space differs from claimed "
               "unit pattern", disc)

    action_ok = unital = shadow = False
    counit_dim = None
    counit_matches = None
    try:
        action = build_action(rep)
        action_ok = True
        unital = unitality_ok(action)
        shadow = module_algebra_shadow(action)
        counit = counit_invariance_space(action)
        counit_dim = counit.dim
        counit_matches = counit == dims["single"]["_inv"]
    except ValueError:
        pass
    _claim(action_ok, "inner action undefined (block matrix singular)",
           disc)
    if action_ok:
        _claim(unital, "inner action is not unital", disc)
        _claim(shadow, "module-algebra compatibility failed on seeded "
               "pairs", disc)

    g = _gauss(q0)
    crosscheck = {"q0": str(q0)}
    cc_ok = True
    for mode in ("single", "family"):
        a0, i0 = _dims_at(gens[mode], g)
        crosscheck[mode] = {
            "operator_algebra": [dims[mode]["operator_algebra"], a0],
            "invariants": [dims[mode]["invariants"], i0],
        }
        cc_ok = cc_ok and a0 == dims[mode]["operator_algebra"] \
            and i0 == dims[mode]["invariants"]
    crosscheck["ok"] = cc_ok
    _claim(cc_ok, f"dimension mismatch at sample point q = {q0}", disc)

    return {
        "entry": entry.name,
        "kind": "gl2",
        "status": "checked",
        "description": entry.description,
        "relations": {k: bool(v) for k, v in rel.relations.items()},
        "detq_invertible": rel.detq_invertible,
        "detq_matches_claim": detq_claim,
        "perturbation_nonzero": rel.perturbation_nonzero,
        "perturbation_claim_ok": pert_claim,
        "consequences": {
            "applicable": cor.applicable,
            "c11_invertible": cor.c11_invertible,
            "c22_invertible": cor.c22_invertible,
            "c12_nilpotent": cor.c12_nilpotent,
            "c21_nilpotent": cor.c21_nilpotent,
            "offdiag_product_diag_zero": cor.offdiag_product_diag_zero,
        },
        "power_commutator": {
            "premise_holds": pc.premise_holds,
            "checked_to": len(pc.results),
            "ok": pc.ok,
        },
        "quantum_plane": {k: list(v) for k, v in qp.pairs.items()},
        "dims": {
            mode: {
                "operator_algebra": dims[mode]["operator_algebra"],
                "invariants": dims[mode]["invariants"],
            } for mode in ("single", "family")
        },
        "mode_divergence":
            dims["single"]["operator_algebra"]
            != dims["family"]["operator_algebra"]
            or dims["single"]["invariants"] != dims["family"]["invariants"],
        "operator_space_matches_claim": op_space_claim,
        "invariant_space_matches_claim": inv_space_claim,
        "action": {
            "well_defined": action_ok,
            "unital": unital,
            "module_algebra": shadow,
        },
        "counit_invariants_dim": counit_dim,
        "counit_matches_centralizer": counit_matches,
        "crosscheck": crosscheck,
        "discrepancies": disc,
    }


def _qspinor_record(entry: CatalogEntry, q0: Fraction,
                    orientation: str) -> dict:
    rep = instantiate(entry)
    claims = entry.claims
    disc = []

    spinor_ok = check_spinor(rep)
    _claim(spinor_ok, "pair does not satisfy the q-spinor relation", disc)

    com = q_commutant(rep.a)
    comr = q_commutant(rep.a, reverse=True)
    com_claim = comr_claim = None
    if claims.commutant_basis is not None:
        com_claim = com == MatSpace.span(list(claims.commutant_basis))
        _claim(com_claim, "commutant differs from claimed basis", disc)
    if claims.commutant_rev_basis is not None:
        comr_claim = comr == MatSpace.span(list(claims.commutant_rev_basis))
        _claim(comr_claim, "reverse commutant differs from claimed basis",
               disc)

    wit = admissibility(rep.a, rep.b, orientation=orientation)
    adm_claim = None
    if claims.admissible is not None and orientation == "default":
        adm_claim = wit.admissible == claims.admissible
        _claim(adm_claim,
               f"admissibility verdict {wit.admissible} differs from "
               f"claim {claims.admissible}", disc)

    g = _gauss(q0)
    a0, b0 = rep.a.eval(g), rep.b.eval(g)
    com0 = q_commutant(a0, q=g)
    comr0 = q_commutant(a0, q=g, reverse=True)
    wit0 = admissibility(a0, b0, q=g, orientation=orientation)
    cc_ok = (com0.dim == com.dim and comr0.dim == comr.dim
             and wit0.c_space.dim == wit.c_space.dim
             and wit0.admissible == wit.admissible)
    _claim(cc_ok, f"dimension mismatch at sample point q = {q0}", disc)

    return {
        "entry": entry.name,
        "kind": "qspinor",
        "status": "checked",
        "description": entry.description,
        "is_spinor_pair": spinor_ok,
        "orientation": orientation,
        "commutant_dim": com.dim,
        "commutant_matches_claim": com_claim,
        "commutant_rev_dim": comr.dim,
        "commutant_rev_matches_claim": comr_claim,
        "admissible": wit.admissible,
        "admissible_claim_ok": adm_claim,
        "c_space_dim": wit.c_space.dim,
        "crosscheck": {
            "q0": str(q0),
            "commutant": [com.dim, com0.dim],
            "commutant_rev": [comr.dim, comr0.dim],
            "c_space": [wit.c_space.dim, wit0.c_space.dim],
            "ok": cc_ok,
        },
        "discrepancies": disc,
    }


def _external_record(entry: CatalogEntry) -> dict:
    return {
        "entry": entry.name,
        "kind": "external",
        "status": "unchecked",
        "description": entry.description,
        "claims": {
            "operator_algebra": entry.claims.dim_operator_algebra,
            "invariants": entry.claims.dim_invariants,
        },
        "discrepancies": [],
    }


def _equivalence_classes(entries: list) -> dict:
    """Union-find over pairwise equivalence of the gl2 entries (at default
    parameters).  Returns entry name -> representative name, in catalog
    order."""
    gl2 = [e for e in entries if e.kind == "gl2"]
    reps = {e.name: instantiate(e) for e in gl2}
    parent = {e.name: e.name for e in gl2}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    names = [e.name for e in gl2]
    for i in range(len(names)):
        for j in range(i + 1, len(names)):
            if find(names[i]) == find(names[j]):
                continue
            if gl2_equivalent(reps[names[i]], reps[names[j]]) is not None:
                parent[find(names[j])] = find(names[i])
    return {n: find(n) for n in names}


def build_report(names: Optional[list] = None, q0: Fraction = Fraction(2),
                 orientation: str = "default") -> dict:
    """Verify the selected catalog entries (all by default) and collect
    the outcome.  Deterministic: same inputs, same dict."""
    if orientation not in ("default", "flipped"):
        raise ValueError(f"unknown orientation: {orientation!r}")
    if q0 == 0:
        raise ValueError("evaluation pole")
    selected = [get_entry(n) for n in names] if names else list(CATALOG)

    classes = _equivalence_classes(selected)

    records = []
    for entry in selected:
        if entry.kind == "gl2":
            rec = _gl2_record(entry, q0)
            rec["equivalence_class"] = classes[entry.name]
            other = entry.claims.distinct_class_from
            if other is not None:
                same = _same_class(entry, other, classes)
                rec["distinct_class_claim_ok"] = not same
                if same:
                    rec["discrepancies"].append(
                        f"claimed to lie in a different equivalence class "
                        f"than {other}, but an exact equivalence witness "
                        "was found")
            else:
                rec["distinct_class_claim_ok"] = None
        elif entry.kind == "qspinor":
            rec = _qspinor_record(entry, q0, orientation)
        else:
            rec = _external_record(entry)
        records.append(rec)

    checked = [r for r in records if r["status"] == "checked"]
    unchecked = [r["entry"] for r in records if r["status"] == "unchecked"]
    disc_map = {r["entry"]: r["discrepancies"] for r in records
                if r["discrepancies"]}
    total = sum(len(v) for v in disc_map.values())

    groups = {}
    for name, rep in classes.items():
        groups.setdefault(rep, []).append(name)

    return {
        "summary": {
            "q0": str(q0),
            "orientation": orientation,
            "entries": len(records),
            "checked": len(checked),
            "unchecked": unchecked,
            "equivalence_classes": [groups[r] for r in groups],
            "discrepancies": disc_map,
            "total_discrepancies": total,
            "all_claims_reproduced": total == 0,
        },
        "entries": records,
    }


def _same_class(entry: CatalogEntry, other_name: str, classes: dict) -> bool:
    if other_name in classes:
        return classes[entry.name] == classes[other_name]
    # referenced entry not selected: compare the pair directly
    return gl2_equivalent(instantiate(entry),
                          instantiate(other_name)) is not None


def report_exit_code(report: dict) -> int:
    return 0 if report["summary"]["all_claims_reproduced"] else 1


def _gl2_detail(rec: dict) -> str:
    d = rec["dims"]
    parts = [
        f"R {d['single']['operator_algebra']}/{d['family']['operator_algebra']}",
        f"I {d['single']['invariants']}/{d['family']['invariants']}",
        f"class {rec['equivalence_class']}",
    ]
    if rec["mode_divergence"]:
        parts.append("(single/family modes diverge)")
    return "  ".join(parts)


def _qspinor_detail(rec: dict) -> str:
    adm = "yes" if rec["admissible"] else "no"
    return (f"B(a) {rec['commutant_dim']}  B'(a) {rec['commutant_rev_dim']}"
            f"  admissible {adm}")


def render_table(report: dict) -> str:
    """Fixed-width human-readable rendering of a report dict."""
    s = report["summary"]
    lines = [
        f"catalog verification  (q0 = {s['q0']}, orientation = "
        f"{s['orientation']})",
        "",
        f"{'entry':<28} {'kind':<9} {'status':<12} detail",
    ]
    for rec in report["entries"]:
        if rec["status"] == "unchecked":
            status = "unchecked"
            detail = (f"claims R {rec['claims']['operator_algebra']}  "
                      f"I {rec['claims']['invariants']} (not recomputed)")
        else:
            status = "ok" if not rec["discrepancies"] else "DISCREPANCY"
            detail = _gl2_detail(rec) if rec["kind"] == "gl2" \
                else _qspinor_detail(rec)
        lines.append(f"{rec['entry']:<28} {rec['kind']:<9} {status:<12} "
                     f"{detail}")
    lines.append("")
    if s["equivalence_classes"]:
        cls = "; ".join("{" + ", ".join(c) + "}"
                        for c in s["equivalence_classes"])
        lines.append(f"equivalence classes: {cls}")
    if s["total_discrepancies"]:
        n = s["total_discrepancies"]
        lines.append(f"{n} discrepanc{'y' if n == 1 else 'ies'}:")
        for name, msgs in s["discrepancies"].items():
            for msg in msgs:
                lines.append(f"  {name}: {msg}")
    else:
        lines.append("no discrepancies")
    verdict = "PASS" if s["all_claims_reproduced"] else "FAIL"
    lines.append(
        f"summary: entries {s['entries']}, checked {s['checked']}, "
        f"unchecked {len(s['unchecked'])}, discrepancies "
        f"{s['total_discrepancies']} -> {verdict}")
    return "\n".join(lines) + "\n"
