from pathlib import Path

import pytest

testing = pytest.importorskip("streamlit.testing.v1")


@pytest.fixture
def app(generated_dir):
    at = testing.AppTest.from_file("../app.py", default_timeout=60)
    at.run()
    return at


def test_app_loads(app):
    assert not app.exception
    assert app.title[0].value.endswith("Affine Orbit Toolkit")


def test_euler_identity_workflow(app):
    app.slider[0].set_value(6)
    app.button[0].click().run()
    assert not app.exception
    assert not app.error
    assert app.success


def test_permutation_window_workflow(app):
    app.radio[0].set_value("Permutation window").run()
    app.button[0].click().run()
    assert not app.exception
    assert any("1 -> " in code.value for code in app.code)


def test_saved_file_can_be_deleted(generated_dir):
    from src.utils.file_manager import FileManager

    path = FileManager().save_window("A 3 3\n1 -> 0\n2 -> 2\n3 -> 4\n")
    at = testing.AppTest.from_file("../app.py", default_timeout=60)
    at.run()
    at.button(key="delete_0").click().run()
    assert not at.exception
    assert not Path(path).exists()
