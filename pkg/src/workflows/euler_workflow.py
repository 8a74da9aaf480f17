import logging
from typing import Any, Dict, List

from src.algebra.kostant import (
    enumerate_palc,
    generic_sign,
    is_in_palc_typed,
    verify_identity,
)
from src.algebra.root_data import build

logger = logging.getLogger(__name__)


class EulerWorkflow:
    """Kostant's expansion for one root system: series comparison and P_alc tables"""

    def __init__(self, type_tag: str, rank: int, show_progress: bool = False):
        self.rs = build(type_tag, rank)
        self.show_progress = show_progress

    def verify(self, degree: int) -> Dict[str, Any]:
        """Compare both sides of the identity up to x^degree"""
        if degree < 0:
            raise ValueError(f"degree must be nonnegative, got {degree}")
        try:
            report = verify_identity(self.rs, degree, progress=self.show_progress)
        except ValueError:
            # domain errors (AffineWeylError) and bad input pass through
            raise
        except Exception as e:
            raise RuntimeError(f"Euler verification failed: {str(e)}") from e
        return report.to_dict()

    def palc_rows(self, max_exponent: int) -> List[Dict[str, Any]]:
        """One row per P_alc weight, with an in-band check of the closed-form test and the generic sign"""
        if max_exponent < 0:
            raise ValueError(f"max exponent must be nonnegative, got {max_exponent}")
        try:
            records = enumerate_palc(self.rs, max_exponent, progress=self.show_progress)
        except ValueError:
            raise
        except Exception as e:
            raise RuntimeError(f"P_alc enumeration failed: {str(e)}") from e

        rows = []
        for record in records:
            row = record.to_dict()
            row["checked"] = (
                is_in_palc_typed(self.rs, record.lam) and generic_sign(self.rs, record.lam) == record.sign
            )
            if not row["checked"]:
                logger.warning("%s: closed-form check failed for %s", self.rs.label, row["lambda"])
            rows.append(row)
        return rows

    @staticmethod
    def rows_to_tsv(rows: List[Dict[str, Any]]) -> str:
        header = ["lambda", "sign", "dim", "exponent", "tau", "finite_part", "checked"]
        lines = ["\t".join(header)]
        for row in rows:
            lines.append("\t".join([
                ",".join(row["lambda"]),
                str(row["sign"]),
                str(row["dim"]),
                str(row["exponent"]),
                ",".join(row["tau"]),
                ",".join(str(t) for t in row["finite_part"]),
                "yes" if row["checked"] else "no",
            ]))
        return "\n".join(lines) + "\n"

    @staticmethod
    def report_to_tsv(report: Dict[str, Any]) -> str:
        lines = ["degree\teuler\tkostant"]
        for k, (a, b) in enumerate(zip(report["euler"], report["kostant"])):
            lines.append(f"{k}\t{a}\t{b}")
        return "\n".join(lines) + "\n"
