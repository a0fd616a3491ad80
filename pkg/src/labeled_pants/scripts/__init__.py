"""Figure move scripts and their start states, shipped as package data."""

from importlib import resources

SCRIPTS = {
    "fig7": "fig7.pentagon",
    "fig9": "fig9.handle-swap",
    "fig10": "fig10.s12-swap",
    "fig11": "fig11.rotation",
    "fig12": "fig12.reflection",
}


def read(name: str) -> str:
    """Text of a shipped script or state file, by short name or file name."""
    fname = SCRIPTS.get(name, name)
    return resources.files(__name__).joinpath(fname).read_text()


def available() -> list[str]:
    return sorted(p.name for p in resources.files(__name__).iterdir()
                  if not p.name.startswith("_"))
