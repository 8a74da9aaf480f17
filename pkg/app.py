import streamlit as st
import sys
from datetime import datetime
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent
sys.path.append(str(project_root))

from src.algebra.errors import AffineWeylError
from src.algebra.root_data import MIN_RANK
from src.algebra.zperm import format_window
from src.workflows import EulerWorkflow, OracleWorkflow, PermutationWorkflow, build_context, parse_word
from src.utils.file_manager import FileManager
from src.ui.components import UIComponents
from config.config import Config

# Page configuration
st.set_page_config(
    page_title="Affine Orbit Toolkit",
    page_icon="🔷",
    layout="wide",
    initial_sidebar_state="expanded"
)

WORKFLOWS = ["Euler identity", "P_alc table", "Permutation window", "Window membership", "Oracle"]


# Initialize session state
def init_session_state():
    if 'history' not in st.session_state:
        st.session_state.history = []


def record(kind: str, label: str, path: str = None):
    st.session_state.history.append({
        'type': kind,
        'label': label,
        'timestamp': datetime.now().strftime('%Y-%m-%d %H:%M:%S'),
        'path': path,
    })


def main():
    init_session_state()

    config = Config()
    file_manager = FileManager(config)
    ui_components = UIComponents()

    st.title("🔷 Affine Orbit Toolkit")
    st.markdown("Exact computations with affine Weyl groups, Kostant's expansion and permutation windows")

    with st.sidebar:
        st.header("⚙️ Configuration")

        type_tag = st.selectbox("Root system type", ["A", "B", "C", "D", "G"])
        if type_tag == "G":
            rank = 2
            st.write("Rank: 2")
        else:
            rank = int(st.number_input("Rank", min_value=MIN_RANK[type_tag], max_value=8, value=max(2, MIN_RANK[type_tag])))

        workflow = st.radio("Workflow", WORKFLOWS)
        save = st.checkbox("Save results", value=False)

    col1, col2 = st.columns([2, 1])

    with col1:
        try:
            if workflow == "Euler identity":
                degree = st.slider("Degree", 0, 60, min(config.DEGREE, 60))
                if st.button("🚀 Verify", type="primary", use_container_width=True):
                    report = EulerWorkflow(type_tag, rank).verify(degree)
                    ui_components.render_identity_report(report)
                    ui_components.render_download(report, f"euler_{type_tag}{rank}.json", "euler_dl")
                    path = file_manager.save_report(report, prefix="euler") if save else None
                    record("Euler identity", f"{type_tag}{rank} up to x^{degree}", path)

            elif workflow == "P_alc table":
                max_exponent = st.slider("Maximal exponent", 0, 40, min(config.MAX_EXPONENT, 40))
                if st.button("🚀 Enumerate", type="primary", use_container_width=True):
                    rows = EulerWorkflow(type_tag, rank).palc_rows(max_exponent)
                    ui_components.render_palc_table(rows)
                    payload = {"root_system": f"{type_tag}{rank}", "max_exponent": max_exponent, "records": rows}
                    path = file_manager.save_report(payload, prefix="palc") if save else None
                    record("P_alc table", f"{type_tag}{rank}, exponent <= {max_exponent}", path)

            elif workflow == "Permutation window":
                kind = kind_selector(type_tag)
                size = permutation_size(type_tag, rank)
                word_text = st.text_input("Word", value="0", help="Comma-separated generator indices")
                if st.button("🚀 Build window", type="primary", use_container_width=True):
                    permutations = PermutationWorkflow(kind, size)
                    word = parse_word(word_text)
                    ui_components.render_window(permutations.describe(word))
                    path = None
                    if save:
                        path = file_manager.save_window(format_window(permutations.window_of_word(word)))
                    record("Permutation window", f"{kind} n={size} word {word_text or '(empty)'}", path)

            elif workflow == "Window membership":
                kind = kind_selector(type_tag)
                size = permutation_size(type_tag, rank)
                text = st.text_area("Window", height=160, placeholder="A 3 3\n1 -> 1\n2 -> 2\n3 -> 3")
                if st.button("🚀 Check", type="primary", use_container_width=True) and text.strip():
                    result = PermutationWorkflow(kind, size).check_text(text)
                    ui_components.render_membership(result)
                    path = file_manager.save_report(result, prefix="check") if save else None
                    record("Window membership", f"{kind} n={size}", path)

            elif workflow == "Oracle":
                context = st.selectbox("Context", ["kostant", "permutation", "alt"])
                max_length = st.slider("Maximal length", 0, 12, min(config.MAX_LENGTH, 12))
                samples = st.slider("Random words", 0, 500, 100)
                if st.button("🚀 Run", type="primary", use_container_width=True):
                    ctx = build_context(type_tag, rank, context)
                    with st.spinner("Enumerating..."):
                        report = OracleWorkflow(ctx).run(max_length, samples=samples, seed=config.SEED).to_dict()
                    ui_components.render_oracle_report(report)
                    path = file_manager.save_report(report, prefix="oracle") if save else None
                    record("Oracle", f"{ctx} up to length {max_length}", path)

        except (AffineWeylError, ValueError) as e:
            st.error(f"Error: {str(e)}")

    with col2:
        st.subheader("📚 History")

        if st.session_state.history:
            for i, item in enumerate(reversed(st.session_state.history[-10:])):
                with st.expander(f"{item['type']} - {item['timestamp']}", expanded=i == 0):
                    st.write(f"**Input:** {item['label']}")
                    if item['path']:
                        st.write(f"**Saved:** {item['path']}")
        else:
            st.info("No computations yet.")

        st.subheader("💾 Saved files")
        ui_components.render_saved_files(file_manager.get_generated_files(), file_manager.delete_file)


def kind_selector(type_tag: str) -> str:
    if type_tag == "C" and st.checkbox("Period 2n+2", value=False):
        return "C-alt"
    return type_tag


def permutation_size(type_tag: str, rank: int) -> int:
    """Window size n is rank + 1 for type A and the rank otherwise"""
    return rank + 1 if type_tag == "A" else rank


if __name__ == "__main__":
    main()
