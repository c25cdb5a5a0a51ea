"""
Shape bundles: a constructed shape together with its named structure maps
"""

from dataclasses import dataclass, field
from typing import Dict, List

from src.maps import OgpMap
from src.ogposet import OrientedGradedPoset


@dataclass
class ShapeBundle:
    """
    Result of a construction

    Args:
        shape: The constructed poset
        maps: Named maps into or out of shape, e.g. 'iota_minus', 'projection', 'retraction'
    """

    shape: OrientedGradedPoset
    maps: Dict[str, OgpMap] = field(default_factory=dict)

    def __getitem__(self, name: str) -> OgpMap:
        return self.maps[name]

    def __contains__(self, name: str) -> bool:
        return name in self.maps

    def names(self) -> List[str]:
        return sorted(self.maps)
