from __future__ import annotations

from typing import List

from pydantic import BaseModel, ConfigDict

from errors import ConfigurationError
from models.conv_kernel import ConvKernel
from models.dilation_group import DilationGroup


class MultiDilatedKernel(BaseModel):
    """
    One ConvKernel per DilationGroup. Group i's kernel reads only the group's channels.

    The groups must tile the input channels in order, which is checked against a
    concrete channel count by `check`.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    groups: List[DilationGroup]
    kernels: List[ConvKernel]

    def check(self, channels: int) -> None:
        """
        Validate the tiling against an input of `channels` channels.

        Raises:
            ConfigurationError: On gaps, overlaps, incomplete cover, or kernels that
                disagree with their group or with each other.
        """
        if not self.groups:
            raise ConfigurationError("Multidilated kernel needs at least one group")

        if len(self.groups) != len(self.kernels):
            raise ConfigurationError(f"{len(self.groups)} groups but {len(self.kernels)} kernels")

        cursor = 0

        for index, (group, kernel) in enumerate(zip(self.groups, self.kernels, strict=True)):
            if group.channel_start != cursor:
                raise ConfigurationError(
                    f"Group {index} starts at channel {group.channel_start}, expected {cursor} (gap or overlap)"
                )

            if kernel.in_channels != group.width:
                raise ConfigurationError(
                    f"Group {index} spans {group.width} channels but its kernel reads {kernel.in_channels}"
                )

            cursor = group.channel_end

        if cursor != channels:
            raise ConfigurationError(f"Groups cover {cursor} channels, input has {channels}")

        first = self.kernels[0]
        shape = (first.out_channels, first.kh, first.kw)

        for index, kernel in enumerate(self.kernels):
            if (kernel.out_channels, kernel.kh, kernel.kw) != shape:
                raise ConfigurationError(f"Group {index} kernel shape differs from group 0: {shape}")

    @property
    def out_channels(self) -> int:
        return self.kernels[0].out_channels
