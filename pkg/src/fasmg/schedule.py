"""Slot schedules: binding time-level quantities to resident field arrays.

A projection time step is an ordered list of steps, each naming a formula,
the quantities it reads and writes, and the resident slot holding each
quantity at that moment.  The classical schedules give every quantity its
own slot and rotate old <- new at the end of the step; the memory-efficient
schedules reuse a fixed set of eight slots (six in 2D) by letting one array
represent different quantities at different steps:

* first order: the end-of-step rotations disappear entirely because each
  corrected velocity is written straight into the slot whose old content
  (the previous time level) has no remaining readers;
* second order: the rotation is kept but lagged to just after the source
  term that needed the previous level, letting ``u^{n-1}``, ``u^n`` and the
  tentative velocity cycle through two slots per component.

Quantity ids: ``u_n``, ``u_nm1`` (previous level), ``u_tld`` (tentative),
``u_np1``, same for ``v``/``w``, ``p_n``, ``p_tld``, ``p_tld_prev`` (the
previous increment, kept as the pressure solve's initial guess), ``p_np1``,
and source terms ``f_u``/``f_v``/``f_w``.  Slot names starting with ``@``
are transient scratch excluded from the resident count.

``validate_schedule`` symbolically executes a schedule: every read must
find its quantity in the named slot (clobbers and missing bindings become
violations), the slot count must match the mode, the binding layout must
return to its initial form after one step, and two schedules can be checked
for equal dataflow by comparing the value terms they carry across steps.
"""

from __future__ import annotations

from dataclasses import dataclass, field


COMPONENTS_3D = ("u", "v", "w")
_VALUE_QUANTITIES = ("u_n", "v_n", "w_n", "p_n", "p_tld_prev")


@dataclass(frozen=True)
class Step:
    """One schedule entry.  ``copy_map`` marks pure data movement: each
    written quantity takes the value of the named read quantity."""

    formula: str
    comp: str | None
    reads: tuple[tuple[str, str], ...]    # (quantity, slot)
    writes: tuple[tuple[str, str], ...]   # (quantity, slot)
    copy_map: tuple[tuple[str, str], ...] = ()   # write quantity -> read quantity

    def describe(self) -> str:
        comp = f" {self.comp}" if self.comp else ""
        return f"{self.formula}{comp}"


@dataclass(frozen=True)
class SlotSchedule:
    name: str
    order: int
    mode: str                     # "classical" | "efficient"
    dim: int
    slots: tuple[str, ...]
    initial: tuple[tuple[str, str], ...]   # quantity -> slot at step start
    steps: tuple[Step, ...]
    rebind: tuple[tuple[str, str], ...]    # end-of-step quantity renames

    @property
    def components(self) -> tuple[str, ...]:
        return COMPONENTS_3D[: self.dim]


def expected_slot_count(order: int, mode: str, dim: int) -> int:
    ncomp = dim
    if mode == "efficient":
        return 2 * ncomp + 2
    return (3 if order == 1 else 4) * ncomp + 3


# ---------------------------------------------------------------------------
# Builders for the four schedules
# ---------------------------------------------------------------------------

def _slot(comp: str, which: str) -> str:
    return f"{comp.upper()}_{which}" if comp != "p" else f"P_{which}"


def build_schedule(order: int, mode: str, dim: int) -> SlotSchedule:
    if order not in (1, 2) or mode not in ("classical", "efficient"):
        raise ValueError(f"no schedule for order={order}, mode={mode}")
    if dim not in (2, 3):
        raise ValueError(f"dim must be 2 or 3, got {dim}")
    comps = COMPONENTS_3D[:dim]
    build = {
        (1, "efficient"): _build_eff1,
        (1, "classical"): _build_cls1,
        (2, "efficient"): _build_eff2,
        (2, "classical"): _build_cls2,
    }[(order, mode)]
    return build(comps, dim)


def _rhs_reads_order1(comps):
    reads = [(f"{c}_n", _slot(c, "old")) for c in comps]
    reads.append(("p_n", "P_old"))
    return tuple(reads)


def _build_eff1(comps, dim) -> SlotSchedule:
    slots = tuple(
        s for c in comps for s in (_slot(c, "new"), _slot(c, "old"))
    ) + ("P_new", "P_old")
    initial = tuple((f"{c}_n", _slot(c, "old")) for c in comps) + (
        ("p_n", "P_old"), ("p_tld_prev", "P_new"),
    )
    steps = []
    for c in comps:
        steps.append(Step("rhs", c, _rhs_reads_order1(comps),
                          ((f"f_{c}", f"@f_{c}"),)))
        steps.append(Step("solve_momentum", c,
                          ((f"f_{c}", f"@f_{c}"), (f"{c}_n", _slot(c, "old"))),
                          ((f"{c}_tld", _slot(c, "new")),)))
    steps.append(Step(
        "solve_pressure", None,
        tuple((f"{c}_tld", _slot(c, "new")) for c in comps)
        + (("p_tld_prev", "P_new"),),
        (("p_tld", "P_new"),),
    ))
    for c in comps:
        steps.append(Step("correct", c,
                          ((f"{c}_tld", _slot(c, "new")), ("p_tld", "P_new")),
                          ((f"{c}_np1", _slot(c, "old")),)))
    steps.append(Step("p_update", None,
                      (("p_n", "P_old"), ("p_tld", "P_new")),
                      (("p_np1", "P_old"),)))
    rebind = tuple((f"{c}_np1", f"{c}_n") for c in comps) + (
        ("p_np1", "p_n"), ("p_tld", "p_tld_prev"),
    )
    return SlotSchedule(f"first-order efficient {dim}D", 1, "efficient", dim,
                        slots, initial, tuple(steps), rebind)


def _build_cls1(comps, dim) -> SlotSchedule:
    slots = tuple(
        s for c in comps
        for s in (_slot(c, "new"), _slot(c, "old"), _slot(c, "tld"))
    ) + ("P_new", "P_old", "P_tld")
    initial = tuple((f"{c}_n", _slot(c, "old")) for c in comps) + (
        ("p_n", "P_old"), ("p_tld_prev", "P_tld"),
    )
    steps = []
    for c in comps:
        steps.append(Step("rhs", c, _rhs_reads_order1(comps),
                          ((f"f_{c}", f"@f_{c}"),)))
        steps.append(Step("solve_momentum", c,
                          ((f"f_{c}", f"@f_{c}"), (f"{c}_n", _slot(c, "old"))),
                          ((f"{c}_tld", _slot(c, "tld")),)))
    steps.append(Step(
        "solve_pressure", None,
        tuple((f"{c}_tld", _slot(c, "tld")) for c in comps)
        + (("p_tld_prev", "P_tld"),),
        (("p_tld", "P_tld"),),
    ))
    for c in comps:
        steps.append(Step("correct", c,
                          ((f"{c}_tld", _slot(c, "tld")), ("p_tld", "P_tld")),
                          ((f"{c}_np1", _slot(c, "new")),)))
    steps.append(Step("p_update", None,
                      (("p_n", "P_old"), ("p_tld", "P_tld")),
                      (("p_np1", "P_new"),)))
    for c in comps:
        steps.append(Step("copy", c,
                          ((f"{c}_np1", _slot(c, "new")),),
                          ((f"{c}_n", _slot(c, "old")),),
                          copy_map=((f"{c}_n", f"{c}_np1"),)))
    steps.append(Step("copy", "p",
                      (("p_np1", "P_new"),), (("p_n", "P_old"),),
                      copy_map=(("p_n", "p_np1"),)))
    rebind = (("p_tld", "p_tld_prev"),)
    return SlotSchedule(f"first-order classical {dim}D", 1, "classical", dim,
                        slots, initial, tuple(steps), rebind)


def _rhs_reads_order2(comps, c, tilde_done, slot_of):
    """Order-2 source terms mix time levels: extrapolation (3u^n - u^{n-1})/2
    for components not yet advanced this step, trapezoidal (u^n + u~)/2 for
    those already advanced."""
    reads = []
    for other in comps:
        if other in tilde_done:
            reads.append((f"{other}_n", slot_of[f"{other}_n"]))
            reads.append((f"{other}_tld", slot_of[f"{other}_tld"]))
        else:
            reads.append((f"{other}_n", slot_of[f"{other}_n"]))
            reads.append((f"{other}_nm1", slot_of[f"{other}_nm1"]))
    reads.append(("p_n", "P_old"))
    # drop duplicates, keep order
    seen, out = set(), []
    for r in reads:
        if r not in seen:
            seen.add(r)
            out.append(r)
    return tuple(out)


def _build_eff2(comps, dim) -> SlotSchedule:
    slots = tuple(
        s for c in comps for s in (_slot(c, "new"), _slot(c, "old"))
    ) + ("P_new", "P_old")
    initial = tuple(
        b for c in comps
        for b in ((f"{c}_n", _slot(c, "new")), (f"{c}_nm1", _slot(c, "old")))
    ) + (("p_n", "P_old"), ("p_tld_prev", "P_new"))
    steps = []
    tilde_done: list[str] = []
    for c in comps:
        slot_of = {}
        for other in comps:
            if other in tilde_done:
                # lag copy already moved u^n to the old slot
                slot_of[f"{other}_n"] = _slot(other, "old")
                slot_of[f"{other}_tld"] = _slot(other, "new")
            else:
                slot_of[f"{other}_n"] = _slot(other, "new")
                slot_of[f"{other}_nm1"] = _slot(other, "old")
        steps.append(Step("rhs", c,
                          _rhs_reads_order2(comps, c, tilde_done, slot_of),
                          ((f"f_{c}", f"@f_{c}"),)))
        steps.append(Step("copy", c,
                          ((f"{c}_n", _slot(c, "new")),),
                          ((f"{c}_n", _slot(c, "old")),),
                          copy_map=((f"{c}_n", f"{c}_n"),)))
        steps.append(Step("solve_momentum", c,
                          ((f"f_{c}", f"@f_{c}"), (f"{c}_n", _slot(c, "new"))),
                          ((f"{c}_tld", _slot(c, "new")),)))
        tilde_done.append(c)
    steps.append(Step(
        "solve_pressure", None,
        tuple((f"{c}_tld", _slot(c, "new")) for c in comps)
        + (("p_tld_prev", "P_new"),),
        (("p_tld", "P_new"),),
    ))
    for c in comps:
        steps.append(Step("correct", c,
                          ((f"{c}_tld", _slot(c, "new")), ("p_tld", "P_new")),
                          ((f"{c}_np1", _slot(c, "new")),)))
    steps.append(Step("p_update", None,
                      (("p_n", "P_old"), ("p_tld", "P_new")),
                      (("p_np1", "P_old"),)))
    rebind = tuple((f"{c}_np1", f"{c}_n") for c in comps) + tuple(
        (f"{c}_n", f"{c}_nm1") for c in comps
    ) + (("p_np1", "p_n"), ("p_tld", "p_tld_prev"))
    return SlotSchedule(f"second-order efficient {dim}D", 2, "efficient", dim,
                        slots, initial, tuple(steps), rebind)


def _build_cls2(comps, dim) -> SlotSchedule:
    slots = tuple(
        s for c in comps
        for s in (_slot(c, "new"), _slot(c, "old"), _slot(c, "2old"),
                  _slot(c, "tld"))
    ) + ("P_new", "P_old", "P_tld")
    initial = tuple(
        b for c in comps
        for b in ((f"{c}_n", _slot(c, "old")), (f"{c}_nm1", _slot(c, "2old")))
    ) + (("p_n", "P_old"), ("p_tld_prev", "P_tld"))
    steps = []
    tilde_done: list[str] = []
    for c in comps:
        slot_of = {}
        for other in comps:
            slot_of[f"{other}_n"] = _slot(other, "old")
            slot_of[f"{other}_nm1"] = _slot(other, "2old")
            slot_of[f"{other}_tld"] = _slot(other, "tld")
        steps.append(Step("rhs", c,
                          _rhs_reads_order2(comps, c, tilde_done, slot_of),
                          ((f"f_{c}", f"@f_{c}"),)))
        steps.append(Step("solve_momentum", c,
                          ((f"f_{c}", f"@f_{c}"), (f"{c}_n", _slot(c, "old"))),
                          ((f"{c}_tld", _slot(c, "tld")),)))
        tilde_done.append(c)
    steps.append(Step(
        "solve_pressure", None,
        tuple((f"{c}_tld", _slot(c, "tld")) for c in comps)
        + (("p_tld_prev", "P_tld"),),
        (("p_tld", "P_tld"),),
    ))
    for c in comps:
        steps.append(Step("correct", c,
                          ((f"{c}_tld", _slot(c, "tld")), ("p_tld", "P_tld")),
                          ((f"{c}_np1", _slot(c, "new")),)))
    steps.append(Step("p_update", None,
                      (("p_n", "P_old"), ("p_tld", "P_tld")),
                      (("p_np1", "P_new"),)))
    for c in comps:
        steps.append(Step("rotate2", c,
                          ((f"{c}_n", _slot(c, "old")),
                           (f"{c}_np1", _slot(c, "new"))),
                          ((f"{c}_nm1", _slot(c, "2old")),
                           (f"{c}_n", _slot(c, "old"))),
                          copy_map=((f"{c}_nm1", f"{c}_n"),
                                    (f"{c}_n", f"{c}_np1"))))
    steps.append(Step("copy", "p",
                      (("p_np1", "P_new"),), (("p_n", "P_old"),),
                      copy_map=(("p_n", "p_np1"),)))
    rebind = (("p_tld", "p_tld_prev"),)
    return SlotSchedule(f"second-order classical {dim}D", 2, "classical", dim,
                        slots, initial, tuple(steps), rebind)


def all_schedules(dim: int) -> tuple[SlotSchedule, ...]:
    return tuple(
        build_schedule(order, mode, dim)
        for order in (1, 2) for mode in ("classical", "efficient")
    )


# ---------------------------------------------------------------------------
# Validation by symbolic execution
# ---------------------------------------------------------------------------

def _symbolic_step(schedule: SlotSchedule, bindings: dict, violations: list,
                   step_no: int):
    """Advance the slot bindings through one time step; terms are nested
    tuples hash-consed by construction."""
    scratch: dict = {}
    for idx, step in enumerate(schedule.steps, 1):
        args = {}
        for q, slot in step.reads:
            store = scratch if slot.startswith("@") else bindings
            held = store.get(slot)
            if held is None:
                violations.append(
                    f"step {idx} ({step.describe()}): reads {q} from empty "
                    f"slot {slot}"
                )
                args[q] = ("missing", q)
            elif held[0] != q:
                violations.append(
                    f"step {idx} ({step.describe()}): reads {q} from {slot} "
                    f"but it holds {held[0]}"
                )
                args[q] = held[1]
            else:
                args[q] = held[1]
        copy_map = dict(step.copy_map)
        for q, slot in step.writes:
            if q in copy_map:
                term = args.get(copy_map[q], ("missing", copy_map[q]))
            else:
                term = (step.formula, step.comp,
                        tuple(sorted((rq, t) for rq, t in args.items())))
            store = scratch if slot.startswith("@") else bindings
            store[slot] = (q, term)
    renames = dict(schedule.rebind)
    for slot, (q, term) in list(bindings.items()):
        bindings[slot] = (renames.get(q, q), term)


def validate_schedule(schedule: SlotSchedule,
                      reference: SlotSchedule | None = None,
                      steps: int = 2) -> list[str]:
    """Return violations (empty list means the schedule is sound).

    Checks: every read finds its quantity (no clobbered or missing
    bindings), slot count matches the mode, the quantity->slot layout is
    steady across time steps, and, when ``reference`` is given, both
    schedules carry identical value dataflow."""
    violations: list[str] = []
    expected = expected_slot_count(schedule.order, schedule.mode, schedule.dim)
    if len(schedule.slots) != expected:
        violations.append(
            f"slot count {len(schedule.slots)} != expected {expected} for "
            f"{schedule.mode} order {schedule.order} in {schedule.dim}D"
        )

    bindings = {slot: (q, ("init", q)) for q, slot in schedule.initial}
    layout0 = {slot: q for slot, (q, _) in bindings.items()}
    carried: list[dict] = []
    for n in range(steps):
        _symbolic_step(schedule, bindings, violations, n)
        carried.append({
            q: term for _, (q, term) in bindings.items() if q in _VALUE_QUANTITIES
        })
    layout_after = {
        slot: q for slot, (q, _) in bindings.items() if q in layout0.values()
    }
    for slot, q in layout0.items():
        if layout_after.get(slot) != q:
            violations.append(
                f"binding of {q} moved from {slot} to "
                f"{[s for s, qq in layout_after.items() if qq == q]}; "
                f"layout must be steady across steps"
            )
            break

    if reference is not None:
        ref_violations: list[str] = []
        ref_bindings = {slot: (q, ("init", q)) for q, slot in reference.initial}
        for n in range(steps):
            _symbolic_step(reference, ref_bindings, ref_violations, n)
        ref_carried = {
            q: term for _, (q, term) in ref_bindings.items()
            if q in _VALUE_QUANTITIES
        }
        if carried[-1] != ref_carried:
            diff = [q for q in ref_carried
                    if carried[-1].get(q) != ref_carried[q]]
            violations.append(
                f"dataflow differs from {reference.name} for quantities {diff}"
            )
    return violations
