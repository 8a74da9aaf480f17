import json
from typing import Any, Callable, Dict, List

import streamlit as st


class UIComponents:
    """UI components for the affine orbit dashboard"""

    def render_identity_report(self, report: Dict[str, Any]):
        """Both sides of Kostant's expansion, with the verdict on top"""
        if report["equal"]:
            st.success(f"✅ {report['root_system']}: both sides agree up to x^{report['degree']}")
        else:
            mismatch = report["first_mismatch"]
            st.error(
                f"❌ {report['root_system']}: first mismatch at x^{mismatch['degree']} "
                f"({mismatch['euler']} vs {mismatch['kostant']})"
            )

        st.write(f"**Lie algebra dimension:** {report['dimension']}")
        rows = [
            {"degree": k, "euler": a, "kostant": b}
            for k, (a, b) in enumerate(zip(report["euler"], report["kostant"]))
        ]
        st.dataframe(rows, use_container_width=True)

    def render_palc_table(self, rows: List[Dict[str, Any]]):
        if not rows:
            st.info("No weights within this exponent bound")
            return

        table = [
            {
                "lambda": ", ".join(row["lambda"]),
                "sign": row["sign"],
                "dim": row["dim"],
                "exponent": row["exponent"],
                "tau": ", ".join(row["tau"]),
                "finite part": " ".join(str(t) for t in row["finite_part"]),
                "checked": "yes" if row["checked"] else "no",
            }
            for row in rows
        ]
        st.dataframe(table, use_container_width=True)

        failed = [row for row in rows if not row["checked"]]
        if failed:
            st.warning(f"{len(failed)} rows fail the closed-form check")

    def render_window(self, description: Dict[str, Any]):
        """Window of a periodic permutation as a two-row table"""
        st.markdown(f"### {description['kind']} window, period {description['period']}")
        word = description["word"]
        st.write(f"**Word:** {', '.join(str(i) for i in word) if word else '(empty)'}")
        st.code(description["inline"])

        columns = st.columns(min(len(description["window"]), 8))
        for k, (i, v) in enumerate(description["window"].items()):
            with columns[k % len(columns)]:
                st.metric(label=f"f({i})", value=v)

    def render_membership(self, result: Dict[str, Any]):
        if result["accepted"]:
            st.success(f"✅ Accepted, length {result['length']}")
            st.write(f"**Reduced word:** {', '.join(str(i) for i in result['word']) or '(empty)'}")
        else:
            st.error(f"❌ Rejected: {result['reason']}")

    def render_oracle_report(self, report: Dict[str, Any]):
        if report["passed"]:
            st.success(f"✅ {report['points']} points checked, no discrepancies")
        else:
            st.error(f"❌ {len(report['discrepancies'])} discrepancies")

        st.dataframe(
            [{"check": name, "count": count} for name, count in sorted(report["checks"].items())],
            use_container_width=True,
        )
        if report["discrepancies"]:
            with st.expander("Discrepancies"):
                for line in report["discrepancies"]:
                    st.write(line)

    def render_download(self, payload: Dict[str, Any], file_name: str, key: str):
        st.download_button(
            label="Download JSON",
            data=json.dumps(payload, indent=2),
            file_name=file_name,
            mime="application/json",
            key=key,
        )

    def render_saved_files(self, files: List[str], on_delete: Callable[[str], bool], max_items: int = 10):
        """Recently saved reports and windows, each with a delete button"""
        if not files:
            st.info("Nothing saved yet")
            return

        for i, path in enumerate(files[:max_items]):
            st.write(f"📄 {path}")
            if st.button("🗑️ Delete", key=f"delete_{i}"):
                if on_delete(path):
                    st.rerun()
                else:
                    st.error(f"Could not delete {path}")
