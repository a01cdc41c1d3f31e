"""
Subcommand handlers for the readcodes command line

Every handler takes the parsed argparse namespace, writes machine-readable
output to standard output (or --out) and a one-line summary to standard
error, and returns the process exit code.
"""
import io
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

import pandas as pd

from ..analysis.characterize import alternating_swap, classify_d4, decompose_pair, l3_confusable
from ..bounds.bounds import bound_reports, reports_frame
from ..codes.codebook import enumerate_code, is_member, pigeonhole_redundancy, residue_search, verify_family
from ..codes.families import Family, derive_params
from ..core.exceptions import InvalidFamilyParams, ParseError
from ..core.logger import get_logger
from ..oracle.sweeps import CHECKS, SweepGrid, sweep
from ..sequences.seqcore import Word, check_same_shape, hamming_distance, read_distance, read_vector

logger = get_logger(__name__)

TABLE_COLUMNS = ["family", "n", "q", "P", "moduli", "size", "redundancy"]
FORMATS = ("csv", "json")


def parse_int_list(text: str, what: str = "value") -> List[int]:
    """"2,3,4" -> [2, 3, 4]"""
    try:
        return [int(token) for token in str(text).split(",") if token.strip() != ""]
    except ValueError:
        raise ParseError(f"cannot parse {what} list {text!r}")


def parse_n_range(text: str) -> range:
    """
    Parse "A..B[:STEP]" (inclusive) or a single "N"

    >>> list(parse_n_range("8..12:2"))
    [8, 10, 12]
    """
    text = str(text).strip()
    body, _, step_text = text.partition(":")
    start_text, sep, stop_text = body.partition("..")
    try:
        start = int(start_text)
        stop = int(stop_text) if sep else start
        step = int(step_text) if step_text else 1
    except ValueError:
        raise ParseError(f"cannot parse n range {text!r}; expected A..B[:STEP]")
    if step < 1:
        raise ParseError(f"n range step must be >= 1, got {step}")
    if stop < start:
        raise ParseError(f"n range stop {stop} is below start {start}")
    return range(start, stop + 1, step)


def parse_radii(text: str) -> List[tuple]:
    """"1:1,2:3" -> [(1, 1), (2, 3)]"""
    radii = []
    for token in str(text).split(","):
        t, sep, d = token.strip().partition(":")
        try:
            radii.append((int(t), int(d)))
        except ValueError:
            raise ParseError(f"cannot parse radius pair {token!r}; expected t:d")
        if not sep:
            raise ParseError(f"radius pair {token!r} needs the form t:d")
    return radii


def emit(text: str, out: Optional[str] = None) -> None:
    """Write text to the --out file, or to standard output"""
    if not text.endswith("\n"):
        text += "\n"
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
        logger.info(f"Wrote {out}")
    else:
        sys.stdout.write(text)


def summary(message: str) -> None:
    print(message, file=sys.stderr)


def _overrides(args) -> Dict[str, Any]:
    overrides: Dict[str, Any] = {}
    for key in ("P", "T", "d"):
        value = getattr(args, key, None)
        if value is not None:
            overrides[key] = value
    if getattr(args, "moduli", None):
        overrides["moduli"] = parse_int_list(args.moduli, "moduli")
    return overrides


def _family_spec(args, n: int):
    """Spec with residues: explicit --residues, otherwise the best residues"""
    spec = derive_params(args.family, n, args.q, args.ell, **_overrides(args))
    if getattr(args, "residues", None):
        return spec.with_residues(parse_int_list(args.residues, "residues")), None
    search = residue_search(spec, getattr(args, "strategy", None), args.budget, args.workers)
    return search.spec, search


def cmd_read(args) -> int:
    word = Word.parse(args.word, args.q)
    R = read_vector(word, args.ell)
    emit(R.to_text(), args.out)
    return 0


def cmd_dist(args) -> int:
    x, y = Word.parse(args.x, args.q), Word.parse(args.y, args.q)
    check_same_shape(x, y)
    result = {
        "x": x.to_text(),
        "y": y.to_text(),
        "ell": args.ell,
        "read_distance": read_distance(x, y, args.ell),
        "hamming_distance": hamming_distance(x, y),
    }
    emit(json.dumps(result), args.out)
    summary(f"{args.ell}-read distance {result['read_distance']}, Hamming distance {result['hamming_distance']}")
    return 0


def cmd_decompose(args) -> int:
    """ell = 2: alternating-block structure; ell >= 3: evenly spaced swap structure"""
    x, y = Word.parse(args.x, args.q), Word.parse(args.y, args.q)
    if args.ell == 2:
        structure = decompose_pair(x, y)
        result = structure.to_dict()
        result["alternating_swap"] = alternating_swap(x, y)
        if structure.predicted_d == 4:
            result["d4"] = classify_d4(x, y).to_dict()
        summary(f"s={structure.s}, predicted 2-read distance {structure.predicted_d}")
    else:
        structure = l3_confusable(x, y, args.ell)
        result = {"confusable": structure is not None, "read_distance": read_distance(x, y, args.ell)}
        if structure is not None:
            result.update(structure.to_dict())
        summary(f"{args.ell}-read distance {result['read_distance']}, "
                f"{'evenly spaced swap' if structure else 'not confusable'}")
    emit(json.dumps(result), args.out)
    return 0


def cmd_check(args) -> int:
    word = Word.parse(args.word, args.q)
    spec, _ = _family_spec(args, len(word))
    member = is_member(spec, word)
    emit(json.dumps({"word": word.to_text(), "member": member, "spec": spec.to_dict()}), args.out)
    summary(f"{word.to_text()} is {'a member' if member else 'not a member'} of {spec.family.value}")
    return 0


def cmd_enum(args) -> int:
    if args.best and args.residues:
        raise ParseError("--best and --residues are mutually exclusive")
    spec, search = _family_spec(args, args.n)
    code = enumerate_code(spec, args.budget, args.workers)
    emit("\n".join(code.to_lines()), args.out)
    line = f"{spec.family.value} n={spec.n} q={spec.q} residues={spec.residues}: {code.size:,} word(s)"
    if search is not None:
        bound = pigeonhole_redundancy(search)
        line += f" (guaranteed >= {search.guaranteed_size:,}"
        if bound is not None:
            line += f", redundancy <= {bound:.3f}"
        line += f", {search.strategy})"
    summary(line)
    return 0


def _grid(args) -> SweepGrid:
    families = tuple(f.strip() for f in args.families.split(",") if f.strip()) if args.families else ()
    if args.check == "family" and not families:
        families = tuple(f.value for f in Family)
    return SweepGrid(
        qs=tuple(parse_int_list(args.q, "q")),
        ns=tuple(range(args.nmin, args.nmax + 1)),
        ells=tuple(parse_int_list(args.ell, "ell")),
        radii=tuple(parse_radii(args.radii)) if args.radii else SweepGrid.radii,
        caps=tuple(parse_int_list(args.caps, "caps")) if args.caps else SweepGrid.caps,
        families=families,
    )


def cmd_verify(args) -> int:
    """Either one registered sweep (--check) or one family code (--family with --n)"""
    if bool(args.check) == bool(args.family):
        raise ParseError("verify needs exactly one of --check or --family")
    if args.family:
        if args.n is None:
            raise ParseError("--family verification needs --n")
        args.q = parse_int_list(args.q, "q")[0]
        args.ell = parse_int_list(args.ell, "ell")[0]
        spec, _ = _family_spec(args, args.n)
        report = verify_family(spec, args.budget, args.workers)
    else:
        if args.nmax < args.nmin:
            raise ParseError(f"--nmax {args.nmax} is below --nmin {args.nmin}")
        report = sweep(args.check, _grid(args), args.budget, args.workers)
    emit(report.to_json(), args.out)
    summary(report.summary())
    return 0 if report.passed else 1


def _json_value(value: Any) -> Any:
    if pd.api.types.is_scalar(value) and pd.isna(value):
        return None
    if hasattr(value, "item"):
        value = value.item()
    return round(value, 6) if isinstance(value, float) else value


def _frame_text(frame: pd.DataFrame, fmt: str) -> str:
    if fmt == "csv":
        buffer = io.StringIO()
        frame.to_csv(buffer, index=False, float_format="%.6f", lineterminator="\n", na_rep="")
        return buffer.getvalue()
    records = [{key: _json_value(value) for key, value in row.items()}
               for row in frame.to_dict(orient="records")]
    return json.dumps(records, indent=2)


def cmd_bounds(args) -> int:
    reports = bound_reports(args.n, args.q, args.ell, args.t, args.d)
    frame = reports_frame(reports)
    emit(_frame_text(frame, args.format), args.out)
    summary(f"{len(reports)} bound row(s) at n={args.n} q={args.q}")
    return 0


@dataclass
class TableRequest:
    families: List[str]
    n_start: int
    n_stop: int
    n_step: int = 1
    q: int = 2
    ell: int = 2
    out: Optional[str] = None
    format: str = "csv"
    overrides: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.n_step < 1:
            raise ParseError(f"n step must be >= 1, got {self.n_step}")
        if self.n_stop < self.n_start:
            raise ParseError(f"n stop {self.n_stop} is below start {self.n_start}")
        if self.format not in FORMATS:
            raise ParseError(f"unknown table format {self.format!r}; expected one of {', '.join(FORMATS)}")
        for family in self.families:
            Family.parse(family)

    @property
    def ns(self) -> range:
        return range(self.n_start, self.n_stop + 1, self.n_step)

    @classmethod
    def from_args(cls, args) -> "TableRequest":
        ns = parse_n_range(args.n)
        families = [f.strip() for f in args.families.split(",") if f.strip()]
        return cls(families, ns.start, ns[-1], ns.step, args.q, args.ell, args.out, args.format, _overrides(args))


def build_table(request: TableRequest, budget: Optional[int] = None, workers: Optional[int] = None) -> pd.DataFrame:
    """Best-residue code size and redundancy for every (family, n)"""
    rows = []
    for name in request.families:
        family = Family.parse(name)
        ell = 3 if family is Family.C33 else request.ell
        for n in request.ns:
            try:
                spec = derive_params(family, n, request.q, ell, **request.overrides)
            except InvalidFamilyParams as e:
                logger.warning(f"Skipping {family.value} at n={n}: {e}")
                continue
            search = residue_search(spec, budget=budget, workers=workers)
            size = search.best_size
            rows.append({
                "family": family.value,
                "n": n,
                "q": request.q,
                "P": spec.P,
                "moduli": ";".join(str(m) for m in spec.moduli),
                "size": size,
                "redundancy": n - math.log(size) / math.log(request.q) if size else None,
            })
    frame = pd.DataFrame(rows, columns=TABLE_COLUMNS)
    frame["redundancy"] = frame["redundancy"].astype(float)
    return frame


def cmd_table(args) -> int:
    request = TableRequest.from_args(args)
    frame = build_table(request, args.budget, args.workers)
    emit(_frame_text(frame, request.format), request.out)
    summary(f"{len(frame)} table row(s) for {', '.join(request.families)}")
    return 0


COMMANDS = {
    "read": cmd_read,
    "dist": cmd_dist,
    "decompose": cmd_decompose,
    "check": cmd_check,
    "enum": cmd_enum,
    "verify": cmd_verify,
    "bounds": cmd_bounds,
    "table": cmd_table,
}


def registered_checks() -> Sequence[str]:
    return sorted(CHECKS)


