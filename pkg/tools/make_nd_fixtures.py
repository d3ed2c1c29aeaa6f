"""Write the natural-deduction template fixtures. Run from the repository root."""
from __future__ import annotations

from pathlib import Path

from deontic_co.nd.checker import check_derivation
from deontic_co.nd.derivation import format_derivation
from deontic_co.nd.templates import TEMPLATE_IDS, fixture_derivation

OUT = Path(__file__).resolve().parents[1] / "src" / "deontic_co" / "fixtures" / "nd"


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for tid in TEMPLATE_IDS:
        d = fixture_derivation(tid)
        check_derivation(d)
        (OUT / f"{tid.lower()}.nd").write_text(format_derivation(d) + "\n")
        print(tid)


if __name__ == "__main__":
    main()
