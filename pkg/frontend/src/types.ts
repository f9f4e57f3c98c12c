// Shapes of the practice service's JSON bodies.

export type Variant = "what_if" | "feedback" | "slider_only" | "none";

export type Phase = "choosing_difficulty" | "practising" | "completed";

export interface TopicOut {
  topic_id: string;
  exercise_count: number;
  practice_ready: boolean;
}

export interface BandOut {
  ordinal: number;
  label: string;
}

export interface MetaOut {
  slider_grid: number[];
  band_thresholds: number[];
  bands: BandOut[];
  variants: string[];
}

export interface ExerciseOut {
  id: string;
  prompt: string;
  difficulty: number;
}

export interface PlanOut {
  series_id: string;
  slider: number;
  target_difficulty: number;
  exercise_ids: string[];
  exercises: ExerciseOut[];
}

export interface SessionOut {
  session_id: string;
  learner_id: string;
  topic_id: string;
  variant: Variant;
  phase: Phase;
  plan: PlanOut | null;
  answered: Record<string, boolean>;
}

export interface ProjectionOut {
  current_rating: number;
  projected_rating: number;
  current_score: number;
  projected_score: number;
  current_band: string;
  projected_band: string;
  slider: number;
  series_exercise_ids: string[];
}

export interface SentenceOut {
  bucket_index: number;
  sentence_index: number;
  text: string;
}

export interface PreviewOut {
  session_id: string;
  variant: Variant;
  slider: number;
  plan: PlanOut;
  projection: ProjectionOut | null;
  sentence: SentenceOut | null;
}

export interface AnswerOut {
  session_id: string;
  exercise_id: string;
  correct: boolean;
  rating: number;
  score: number;
  band: string;
  phase: Phase;
  answered_count: number;
}

export interface MasteryOut {
  learner_id: string;
  topic_id: string;
  rating: number;
  score: number;
  band: string;
  attempt_count: number;
}

export interface WhyItemOut {
  exercise_id: string;
  difficulty: number;
  recommended: boolean;
  attempt_count: number;
  last_correct: boolean | null;
}

export interface WhyOut {
  topic_id: string;
  learner_band: string;
  learner_score: number;
  items: WhyItemOut[];
}

export interface ErrorBody {
  code: string;
  message: string;
  detail: Record<string, unknown>;
}
