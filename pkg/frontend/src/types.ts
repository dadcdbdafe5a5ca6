// Wire types of the /v1 session protocol.  Every number travels as a
// decimal string; the client never converts them to floats.

export interface GrapeOut {
  label: string;
  x: string;
  y: string;
}

export interface ClusterOut {
  grapes: GrapeOut[];
  serialization: string;
}

export interface SessionOut {
  session: string;
  cluster: ClusterOut;
  depth: string;
}

export interface MoveOut {
  x: string;
  y: string;
  dir: string;
  n: string;
  target_x: string;
  target_y: string;
}

export interface MoveBody {
  x: string;
  y: string;
  dir: string;
  n: string;
}

export interface InvariantsOut {
  dim: string;
  rank: string;
  determinant: string;
  signature: string;
  even: boolean;
  definiteness: string;
}

export interface GoalOut {
  target: string;
  reached: boolean;
}

export interface HintOut {
  move: MoveOut | null;
  reason: string;
}
