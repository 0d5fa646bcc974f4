import numpy as np

from models.conv_kernel import ConvKernel
from models.tensor import Tensor
from services.conv.helpers.conv2d import padding


def conv2d_reference(input: Tensor, kernel: ConvKernel, dilation: int = 1) -> Tensor:  # noqa: A002
    """
    Direct-loop cross-correlation, one output element at a time.

    Slow; only used to cross-check `conv2d` on small shapes.
    """
    n, channels, h, w = input.shape
    pad_h, pad_w = padding(kernel, dilation)
    x = input.data
    weights = kernel.weights
    output = np.zeros((n, kernel.out_channels, h, w))

    for batch in range(n):
        for out in range(kernel.out_channels):
            for y in range(h):
                for z in range(w):
                    total = 0.0

                    for channel in range(channels):
                        for row in range(kernel.kh):
                            source_y = y + row * dilation - pad_h

                            if not 0 <= source_y < h:
                                continue

                            for col in range(kernel.kw):
                                source_z = z + col * dilation - pad_w

                                if 0 <= source_z < w:
                                    total += weights[out, channel, row, col] * x[batch, channel, source_y, source_z]

                    output[batch, out, y, z] = total

    return Tensor(output)
