// Payload types served by `qq serve` under /api. The browser client talks to the
// service only through these shapes; all game rules run server side.

export type Complex = [number, number];
export type StateVector = Complex[];
export type Matrix4 = Complex[][];
export type GameId = "bloch" | "entanglement" | "circuits";
export type GateName = "X" | "Y" | "Z" | "H" | "S" | "CNOT";
export type ActionName = "Jump" | "Crawl" | "Balance" | "Weave" | "Climb" | "Pause";
export type ColorTag = "pink" | "yellow" | "blue" | "orange" | "zero";

export interface BlochVector { x: number; y: number; z: number; }
export interface ColorClass { primary: ColorTag; secondary?: ColorTag; }
export interface ApiError { error: string; session?: SessionView; }

export interface CreatedProfile { profile_id: string; token: string; nickname: string; }

export interface LedgerEntry {
  game: GameId; level_id: number; raw_score: number; awarded: number;
  replay: boolean; timestamp: string; session_id: string;
}

export interface ProfileView {
  id: string;
  profile_id: string;
  nickname: string;
  total_points: number;
  completed: Record<GameId, number[]>;
  jester_outfits: GameId[];
  quiz_records: Record<string, { attempts: number; high_score: number }>;
  ledger: LedgerEntry[];
  circuits_unlocked: boolean;
}

export interface GameSummary {
  game_id: GameId; unlocked: boolean; levels_completed: number; total: number; jester_outfit: boolean;
}

export interface LevelSummary { level_id: number; completed: boolean; unlocked: boolean; }

export interface Tooltip {
  gate: GateName;
  text: string;
  matrix?: Record<"wire_0" | "wire_1", Matrix4> | Record<"control_0" | "control_1", Matrix4>;
}

export interface BlochLevelDetail {
  game_id: "bloch"; level_id: number;
  start_state: StateVector; target_state: StateVector;
  start_bloch: BlochVector; target_bloch: BlochVector;
  allowed_gates: GateName[]; min_solution_length: number; tooltips: Tooltip[];
  intro_popup?: string; hint?: string;
}

export interface Obstacle { label: string; required_action: ActionName; }

export interface EntanglementLevelDetail {
  game_id: "entanglement"; level_id: number;
  mode: "correlated" | "anti_correlated";
  course_a: Obstacle[]; course_b: Obstacle[];
  decoherence_enabled: boolean; wrong_move_limit: number;
  intro_popup?: string;
}

export interface CircuitLevelDetail {
  game_id: "circuits"; level_id: number;
  input_state: StateVector; target_state: StateVector;
  target_matrix: Matrix4; target_colors: ColorClass[][];
  allowed_gates: GateName[]; max_columns: number; penalty_enabled: boolean;
  tooltips: Tooltip[]; intro_popup?: string;
}

export type LevelDetail = BlochLevelDetail | EntanglementLevelDetail | CircuitLevelDetail;

interface SessionBase {
  session_id: string; level_id: number;
  // Present once the level is won and points are banked.
  score?: number; awarded?: number; replay?: boolean;
}

export interface BlochSessionView extends SessionBase {
  game_id: "bloch";
  status: "InProgress" | "Won";
  moves: GateName[];
  state: StateVector; bloch: BlochVector; probabilities: [number, number];
  target_state: StateVector; target_bloch: BlochVector;
  allowed_gates: GateName[];
}

export interface EntanglementSessionView extends SessionBase {
  game_id: "entanglement";
  status: "InProgress" | "Won" | "Failed";
  mode: "correlated" | "anti_correlated";
  position: number; course_length: number;
  synced_count: number; wrong_count: number;
  decoherence: number; decoherence_enabled: boolean; wrong_move_limit: number;
  last_outcome: "synced" | "wrong" | null;
  last_partner_action?: ActionName;
}

export interface Placement { gate: GateName; column: number; wire?: 0 | 1; control?: 0 | 1; target?: 0 | 1; }

export interface CircuitSessionView extends SessionBase {
  game_id: "circuits";
  status: "InProgress" | "Won" | "Exhausted";
  grid: Placement[]; max_columns: number;
  fish: { fish_remaining: number; points_remaining: number; outfit_stage: number };
  removals: number; penalty_enabled: boolean;
  circuit_matrix: Matrix4; colors: ColorClass[][]; output_state: StateVector;
  target_matrix: Matrix4; target_state: StateVector;
  prompt?: string;
}

export type SessionView = BlochSessionView | EntanglementSessionView | CircuitSessionView;

export type Move =
  | { gate: Exclude<GateName, "CNOT"> }
  | { action: ActionName }
  | { op: "place"; gate: Exclude<GateName, "CNOT">; column: number; wire?: 0 | 1 }
  | { op: "place"; gate: "CNOT"; column: number; control: 0 | 1; target: 0 | 1 }
  | { op: "remove"; column: number; wire?: 0 | 1 };

export interface QuizSummary {
  id: string; kind: "assessment" | "in_game"; title: string; game?: GameId;
  attempts: number; high_score: number;
}

export interface QuizView {
  id: string; kind: "assessment" | "in_game"; title: string; game?: GameId;
  reveal_correct: boolean;
  questions: { id: string; prompt: string; options: string[]; allow_idk: boolean }[];
  default_answers?: "idk"[];
}

export type Answer = number | "idk" | null;

export interface QuestionFeedback { correct: boolean; correct_index?: number; }

export interface QuizResult {
  quiz_id: string; score: number; out_of: number;
  record: { attempts: number; high_score: number };
  per_question?: QuestionFeedback[];
}
