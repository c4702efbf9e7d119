from .svg_renderer import SvgRenderer

__all__ = ["SvgRenderer"]
