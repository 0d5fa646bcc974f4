from multiprocessing import Queue
from typing import Any, Dict, Union
from unittest.mock import patch

from configs.constants import MARKER_TWIN_FLOOR
from enums.dilation_mode import DilationMode
from enums.norm_kind import NormKind
from errors import ArgumentError, ConfigurationError, DimensionError, WorkerError
from models.d2_config import D2Config
from models.d3_config import D3Config
from models.optimizer_config import OptimizerConfig
from models.toy_job import ToyJobModel
from services.model_builder import ModelBuilderService
from services.toy import ToyService
from services.trainer import TrainerService
from tests.integration.wrappers.block import BlockWrapper


def _exit_without_report(job: Dict[str, Any], results: Queue) -> None:  # noqa: ARG001
    return None


class TestToy(BlockWrapper):
    # ───────────────────────────────────────────────────────────
    # CONSTANTS
    # ───────────────────────────────────────────────────────────
    _LENGTH: int = 64
    _DISTANCE: int = 20
    _CENTRE: int = 32

    # ───────────────────────────────────────────────────────────
    # PROPERTIES
    # ───────────────────────────────────────────────────────────
    _toy: ToyService
    _builder: ModelBuilderService

    # ───────────────────────────────────────────────────────────
    # CONSTRUCTOR
    # ───────────────────────────────────────────────────────────
    def setUp(self) -> None:
        super().setUp()
        self._toy = ToyService()
        self._builder = ModelBuilderService()

    # ───────────────────────────────────────────────────────────
    # PUBLIC METHODS
    # ───────────────────────────────────────────────────────────
    def job(
        self,
        config: Union[D2Config, D3Config],
        run_id: str = "toy",
        epochs: int = 3,
        lr: float = 0.01,
        distance: int = 4,
    ) -> ToyJobModel:
        return ToyJobModel(
            run_id=run_id,
            config=config.model_dump(mode="json"),
            distance=distance,
            length=32,
            count=32,
            seed=0,
            optimizer=OptimizerConfig(lr=lr, epochs=epochs, batch_size=8),
        )

    # ───────────────────────────────────────────────────────────
    # TRAINING
    # ───────────────────────────────────────────────────────────
    def test_run_is_deterministic(self) -> None:
        """Verify equal jobs give byte-identical serialised reports."""
        job = self.job(D2Config(L=3, k=2))

        first = self._toy.run(job)
        second = self._toy.run(job)

        assert first.to_dict() == second.to_dict()
        assert len(first.losses) == 3

    def test_zero_learning_rate_keeps_loss(self) -> None:
        """Verify lr=0 leaves the full-dataset loss unchanged across epochs."""
        report = self._toy.run(self.job(D2Config(L=2, k=2), epochs=4, lr=0.0))

        assert len(set(report.losses)) == 1

    def test_training_reduces_loss(self) -> None:
        """Verify a few epochs of SGD lower the loss."""
        report = self._toy.run(self.job(D2Config(L=3, k=4), epochs=20, lr=0.05, distance=2))

        assert report.final_loss is not None
        assert report.final_loss < report.losses[0]

    def test_short_receptive_field_hits_marker_floor(self) -> None:
        """Verify a model that cannot see p - D keeps the twin loss at or above 0.25."""
        config = D2Config(L=5, k=2, mode=DilationMode.NONE)
        job = ToyJobModel(
            run_id="none",
            config=config.model_dump(mode="json"),
            distance=self._DISTANCE,
            length=self._LENGTH,
            count=32,
            optimizer=OptimizerConfig(epochs=2, batch_size=8),
        )

        report = self._toy.run(job)

        assert report.marker_twin_loss is not None
        assert report.marker_twin_loss >= MARKER_TWIN_FLOOR - 1e-6
        assert report.above_marker_floor
        assert report.train_floor == MARKER_TWIN_FLOOR * (self._LENGTH - self._DISTANCE) / self._LENGTH

    def test_multidilated_model_learns_distant_marker(self) -> None:
        """Verify a multidilated D2(L=5, k=8) fits the D=20 task below the target loss within 200 epochs."""
        data = self.get_json_data("toy_multi_d20.json")
        job = ToyJobModel.model_validate(data["job"])

        report = self._toy.run(job)

        assert report.final_loss is not None
        assert report.final_loss < data["target_loss"], f"final loss {report.final_loss:.6f}"
        assert report.final_loss < report.train_floor
        assert len(report.losses) == job.optimizer.epochs

    def test_run_parallel_keeps_job_order(self) -> None:
        """Verify one worker per mode and reports returned in job order."""
        base = D2Config(L=2, k=2)
        jobs = [self.job(base.with_mode(mode), run_id=f"toy-{mode.value}") for mode in DilationMode]

        reports = self._toy.run_parallel(jobs)

        assert [report.run_id for report in reports] == [job.run_id for job in jobs]
        assert reports[0].to_dict() == self._toy.run(jobs[0]).to_dict()

    def test_run_parallel_rejects_duplicate_run_ids(self) -> None:
        """Verify two jobs sharing a run id are refused before any worker starts."""
        base = D2Config(L=2, k=2)
        jobs = [self.job(base, run_id="twin"), self.job(base.with_mode(DilationMode.NONE), run_id="twin")]

        with patch("services.toy.Process") as process:
            with self.assertRaises(ArgumentError):
                self._toy.run_parallel(jobs)

        process.assert_not_called()

    def test_run_parallel_reports_silent_worker(self) -> None:
        """Verify a worker that exits without a result raises instead of blocking."""
        base = D2Config(L=2, k=2)
        jobs = [self.job(base, run_id="silent-a"), self.job(base.with_mode(DilationMode.NONE), run_id="silent-b")]

        with patch("services.toy._run_job", _exit_without_report):
            with self.assertRaises(WorkerError):
                self._toy.run_parallel(jobs)

    # ───────────────────────────────────────────────────────────
    # PERTURBATION
    # ───────────────────────────────────────────────────────────
    def test_perturb_independence_respects_receptive_field(self) -> None:
        """Verify a 5-layer undilated model ignores rows beyond ±5 and a multidilated one does not."""
        task = self._toy.gen_task(0, self._LENGTH, self._DISTANCE, 1)
        inputs, _ = task.sample(0)
        outside = [row for row in range(self._LENGTH) if abs(row - self._CENTRE) > 5]

        narrow = self._builder.build_toy_model(D2Config(L=5, k=2, mode=DilationMode.NONE), seed=0)
        wide = self._builder.build_toy_model(D2Config(L=5, k=2), seed=0)

        assert self._toy.perturb_independence(narrow, inputs, self._CENTRE, outside)
        assert not self._toy.perturb_independence(narrow, inputs, self._CENTRE, [self._CENTRE - 1])
        assert not self._toy.perturb_independence(wide, inputs, self._CENTRE, [self._CENTRE - self._DISTANCE])
        assert self._toy.perturb_independence(wide, inputs, self._CENTRE, [])

    # ───────────────────────────────────────────────────────────
    # EDGE CASES
    # ───────────────────────────────────────────────────────────
    def test_run_rejects_backbone_config(self) -> None:
        """Verify the toy task refuses a backbone description."""
        config = self._builder.preset("d3net_s")
        job = ToyJobModel(run_id="backbone", config=config.model_dump(mode="json"), distance=2)

        with self.assertRaises(ConfigurationError):
            self._toy.run(job)

    def test_trainer_rejects_multi_channel_output(self) -> None:
        """Verify a bare block without the one-channel head cannot be trained."""
        config = D2Config(L=2, k=2, in_channels=2)
        block = self._builder.build_block(config, norm_kind=NormKind.FIXED_AFFINE)
        task = self._toy.gen_task(0, 32, 4, 8)

        with self.assertRaises(DimensionError):
            TrainerService(OptimizerConfig(epochs=1)).train(block, task)
