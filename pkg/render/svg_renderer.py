"""
2차원 인스턴스/네트워크 SVG 출력
같은 입력이면 항상 같은 바이트열
"""

import logging
import xml.etree.ElementTree as ET
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence

import sys
sys.path.insert(0, str(__file__).rsplit("/", 2)[0])
from errors import ConfigError
from models import Instance, RectilinearNetwork

logger = logging.getLogger(__name__)

SVG_NS = "http://www.w3.org/2000/svg"


def _num(value) -> str:
    """표시용 좌표 (유효숫자 8자리)"""
    text = format(float(value), ".8g")
    return "0" if text == "-0" else text


class SvgRenderer:
    """인스턴스와 네트워크를 SVG 장면으로 변환"""

    COLORS = {
        "pair": "#7f8c8d",
        "terminal": "#c0392b",
        "network": "#2c3e50",
        "separator": "#27ae60",
    }

    def __init__(self, width: int = 800, margin: Fraction = Fraction(1, 20)):
        if width <= 0:
            raise ConfigError(f"SVG 너비는 양수: {width}")
        self.width = width
        self.margin = Fraction(margin)

    def render(
        self,
        inst: Instance,
        network: Optional[RectilinearNetwork] = None,
        separators: Optional[Sequence[Fraction]] = None,
    ) -> str:
        """separators 를 생략하면 인스턴스의 분리 좌표 (x = s1, y = s2) 를 그림"""
        if inst.d != 2:
            raise ConfigError(f"SVG 출력은 2차원 전용 (입력 {inst.d}차원)")
        if inst.is_empty():
            raise ConfigError("빈 인스턴스는 그릴 수 없음")
        if network is not None and network.d not in (None, 2):
            raise ConfigError(f"네트워크 차원 {network.d} 이 인스턴스와 다름")
        separators = inst.separators if separators is None else tuple(separators)

        points = list(inst.terminals())
        if network is not None:
            points += [p for seg in network.segments for p in (seg.a, seg.b)]
        x0, x1 = min(p[0] for p in points), max(p[0] for p in points)
        y0, y1 = min(p[1] for p in points), max(p[1] for p in points)
        span = max(x1 - x0, y1 - y0) or Fraction(1)
        pad = span * self.margin
        # y 를 뒤집어 그리므로 viewBox 의 y 범위는 [-y1, -y0]
        vx, vy = x0 - pad, -(y1 + pad)
        vw, vh = (x1 - x0) + 2 * pad, (y1 - y0) + 2 * pad
        unit = span / 100

        root = ET.Element("svg", {
            "xmlns": SVG_NS,
            "width": str(self.width),
            "height": _num(self.width * vh / vw),
            "viewBox": " ".join(_num(v) for v in (vx, vy, vw, vh)),
        })
        self._separators(root, separators, (vx, vy, vw, vh))
        self._pairs(root, inst)
        if network is not None and network.segments:
            self._network(root, network)
        self._terminals(root, inst, unit)

        ET.indent(root)
        return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(root, encoding="unicode") + "\n"

    def _separators(self, root: ET.Element, separators: Sequence[Fraction], view) -> None:
        vx, vy, vw, vh = view
        group = ET.SubElement(root, "g", {"id": "separators"})
        for axis, s in enumerate(separators[:2]):
            if axis == 0:
                ends = (s, vy, s, vy + vh)
            else:
                ends = (vx, -s, vx + vw, -s)
            ET.SubElement(group, "line", {
                "x1": _num(ends[0]), "y1": _num(ends[1]), "x2": _num(ends[2]), "y2": _num(ends[3]),
                "stroke": self.COLORS["separator"],
                "stroke-width": "1",
                "vector-effect": "non-scaling-stroke",
            })

    def _pairs(self, root: ET.Element, inst: Instance) -> None:
        group = ET.SubElement(root, "g", {"id": "pairs"})
        for box in inst.pairs:
            ET.SubElement(group, "rect", {
                "x": _num(box.lo[0]),
                "y": _num(-box.hi[1]),
                "width": _num(box.hi[0] - box.lo[0]),
                "height": _num(box.hi[1] - box.lo[1]),
                "fill": "none",
                "stroke": self.COLORS["pair"],
                "stroke-width": "1",
                "stroke-dasharray": "4 3",
                "vector-effect": "non-scaling-stroke",
            })

    def _network(self, root: ET.Element, network: RectilinearNetwork) -> None:
        commands: List[str] = []
        for seg in network.segments:
            commands.append(f"M {_num(seg.a[0])} {_num(-seg.a[1])} L {_num(seg.b[0])} {_num(-seg.b[1])}")
        ET.SubElement(root, "path", {
            "id": "network",
            "d": " ".join(commands),
            "fill": "none",
            "stroke": self.COLORS["network"],
            "stroke-width": "2",
            "vector-effect": "non-scaling-stroke",
        })

    def _terminals(self, root: ET.Element, inst: Instance, unit: Fraction) -> None:
        group = ET.SubElement(root, "g", {"id": "terminals"})
        for i, box in enumerate(inst.pairs):
            for mark, p in zip(("", "'"), box.pair):
                ET.SubElement(group, "circle", {
                    "cx": _num(p[0]), "cy": _num(-p[1]), "r": _num(unit),
                    "fill": self.COLORS["terminal"],
                })
                label = ET.SubElement(group, "text", {
                    "x": _num(p[0] + unit * 2), "y": _num(-p[1] - unit * 2),
                    "font-size": _num(unit * 4),
                    "fill": self.COLORS["terminal"],
                })
                label.text = f"t{i}{mark}"

    def write(
        self,
        path,
        inst: Instance,
        network: Optional[RectilinearNetwork] = None,
        separators: Optional[Sequence[Fraction]] = None,
    ) -> Path:
        text = self.render(inst, network, separators)
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        logger.debug(f"SVG 저장: {path} (쌍 {inst.n}개)")
        return path
